//! Plain-text instance files.
//!
//! Array: `n` on the first line, then `n` integers. Queries: one per line,
//! `l r` or `l1 r1 l2 r2`. Graph: `n m`, then `m` lines `u v` with vertices
//! in `1..=n`. Matrix: `rows cols`, then one line per row. Blank lines are
//! ignored everywhere; all indices are 1-based.

use std::fmt::Write as _;
use std::path::Path;

use crate::array::{IntArray, Range, RangePair, ValueCap};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::DenseMatrix;

/// Non-empty lines with their 1-based line numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_ints<T: std::str::FromStr>(line: usize, s: &str) -> Result<Vec<T>> {
    s.split_whitespace()
        .map(|tok| {
            tok.parse::<T>().map_err(|_| Error::Parse {
                line,
                msg: format!("not an integer: {tok:?}"),
            })
        })
        .collect()
}

fn header<T: std::str::FromStr + Copy>(
    it: &mut dyn Iterator<Item = (usize, &str)>,
    arity: usize,
    what: &str,
) -> Result<(usize, Vec<T>)> {
    let (line, s) = it.next().ok_or(Error::Parse {
        line: 1,
        msg: format!("missing {what} header"),
    })?;
    let v = parse_ints(line, s)?;
    if v.len() != arity {
        return Err(Error::Parse {
            line,
            msg: format!("{what} header needs {arity} numbers, found {}", v.len()),
        });
    }
    Ok((line, v))
}

pub fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Values may span several lines after the header. Magnitudes above the
/// default cap are rejected.
pub fn parse_array(text: &str) -> Result<IntArray> {
    let mut it = lines(text);
    let (hline, h) = header::<usize>(&mut it, 1, "array")?;
    let n = h[0];
    let mut values = Vec::with_capacity(n);
    let mut last = hline;
    for (line, s) in it {
        last = line;
        values.extend(parse_ints::<i64>(line, s)?);
        if values.len() > n {
            return Err(Error::Parse {
                line,
                msg: format!("more than {n} values"),
            });
        }
    }
    if values.len() != n {
        return Err(Error::Parse {
            line: last,
            msg: format!("expected {n} values, found {}", values.len()),
        });
    }
    IntArray::with_cap(values, ValueCap::default())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QueryFile {
    Single(Vec<Range>),
    Pairs(Vec<RangePair>),
}

impl QueryFile {
    pub fn len(&self) -> usize {
        match self {
            QueryFile::Single(q) => q.len(),
            QueryFile::Pairs(q) => q.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// An empty file parses as an empty single-range list. Mixed arities are an
/// error. Ranges are checked against `n` when given.
pub fn parse_queries(text: &str, n: Option<usize>) -> Result<QueryFile> {
    let mut single = Vec::new();
    let mut pairs = Vec::new();
    for (line, s) in lines(text) {
        let v = parse_ints::<usize>(line, s)?;
        let located = |e: Error| match e {
            Error::Range(msg) | Error::Input(msg) => Error::Parse { line, msg },
            e => e,
        };
        match v.len() {
            2 => {
                let r = Range::new(v[0], v[1]);
                if let Some(n) = n {
                    r.check(n).map_err(located)?;
                }
                single.push((line, r));
            }
            4 => {
                let p = RangePair::from_bounds(v[0], v[1], v[2], v[3]);
                if let Some(n) = n {
                    p.check(n).map_err(located)?;
                }
                pairs.push((line, p));
            }
            k => {
                return Err(Error::Parse {
                    line,
                    msg: format!("a query has 2 or 4 numbers, found {k}"),
                })
            }
        }
        if !single.is_empty() && !pairs.is_empty() {
            return Err(Error::Parse {
                line,
                msg: "mixes single ranges and range pairs".into(),
            });
        }
    }
    Ok(if pairs.is_empty() {
        QueryFile::Single(single.into_iter().map(|x| x.1).collect())
    } else {
        QueryFile::Pairs(pairs.into_iter().map(|x| x.1).collect())
    })
}

/// Vertex labels are kept as written. Isolated vertices are allowed in the
/// file but do not appear in the graph.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut it = lines(text);
    let (hline, h) = header::<usize>(&mut it, 2, "graph")?;
    let (n, m) = (h[0], h[1]);
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    let mut last = hline;
    for (line, s) in it {
        last = line;
        let v = parse_ints::<usize>(line, s)?;
        if v.len() != 2 {
            return Err(Error::Parse {
                line,
                msg: format!("an edge has 2 endpoints, found {}", v.len()),
            });
        }
        let (u, w) = (v[0], v[1]);
        if u == 0 || w == 0 || u > n || w > n {
            return Err(Error::Parse {
                line,
                msg: format!("vertex out of range 1..={n}"),
            });
        }
        if u == w {
            return Err(Error::Parse {
                line,
                msg: format!("self-loop at {u}"),
            });
        }
        if !seen.insert((u.min(w), u.max(w))) {
            return Err(Error::Parse {
                line,
                msg: format!("repeated edge {u} {w}"),
            });
        }
        edges.push((u as u32, w as u32));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: last,
            msg: format!("expected {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edges(edges)
}

pub fn parse_matrix(text: &str) -> Result<DenseMatrix> {
    let mut it = lines(text);
    let (hline, h) = header::<usize>(&mut it, 2, "matrix")?;
    let (rows, cols) = (h[0], h[1]);
    let mut data = Vec::with_capacity(rows * cols);
    let mut count = 0;
    let mut last = hline;
    for (line, s) in it {
        last = line;
        let v = parse_ints::<i64>(line, s)?;
        if v.len() != cols {
            return Err(Error::Parse {
                line,
                msg: format!("row has {} entries, expected {cols}", v.len()),
            });
        }
        count += 1;
        if count > rows {
            return Err(Error::Parse {
                line,
                msg: format!("more than {rows} rows"),
            });
        }
        data.extend(v);
    }
    if count != rows {
        return Err(Error::Parse {
            line: last,
            msg: format!("expected {rows} rows, found {count}"),
        });
    }
    DenseMatrix::from_vec(rows, cols, data)
}

fn join<T: ToString>(v: impl IntoIterator<Item = T>) -> String {
    v.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn format_array(a: &IntArray) -> String {
    format!("{}\n{}\n", a.len(), join(a.values()))
}

pub fn format_queries(q: &QueryFile) -> String {
    let mut s = String::new();
    match q {
        QueryFile::Single(v) => v
            .iter()
            .for_each(|r| writeln!(s, "{} {}", r.l, r.r).unwrap()),
        QueryFile::Pairs(v) => v.iter().for_each(|p| {
            writeln!(
                s,
                "{} {} {} {}",
                p.first.l, p.first.r, p.second.l, p.second.r
            )
            .unwrap()
        }),
    }
    s
}

/// `n` is the largest label, so a graph with positive labels round-trips.
/// Files are 1-based: a graph that uses label 0 is written with every
/// label shifted up by one.
pub fn format_graph(g: &Graph) -> String {
    let shift = u32::from(g.labels().first() == Some(&0));
    let n = g.labels().last().map_or(0, |&x| x + shift);
    let mut s = format!("{n} {}\n", g.m());
    for (u, v) in g.edge_label_list() {
        writeln!(s, "{} {}", u + shift, v + shift).unwrap();
    }
    s
}

pub fn format_matrix(m: &DenseMatrix) -> String {
    let mut s = format!("{} {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        writeln!(s, "{}", join(m.row(i))).unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        let a = IntArray::new(vec![3, -1, 4, 1, 5]).unwrap();
        assert_eq!(parse_array(&format_array(&a)).unwrap(), a);
        let q = QueryFile::Pairs(vec![RangePair::from_bounds(1, 2, 3, 5)]);
        assert_eq!(parse_queries(&format_queries(&q), Some(5)).unwrap(), q);
        let g = Graph::from_edges([(1, 2), (2, 3), (1, 3), (3, 4)]).unwrap();
        assert_eq!(parse_graph(&format_graph(&g)).unwrap(), g);
        let m = DenseMatrix::from_rows(&[vec![1, 2, 3], vec![-4, 5, 6]]).unwrap();
        assert_eq!(parse_matrix(&format_matrix(&m)).unwrap(), m);
    }

    #[test]
    fn values_may_wrap_lines() {
        assert_eq!(
            parse_array("4\n1 2\n3 4\n").unwrap().values(),
            &[1, 2, 3, 4]
        );
    }

    #[test]
    fn empty_query_file() {
        assert!(parse_queries("", Some(3)).unwrap().is_empty());
        assert!(parse_queries("\n\n", None).unwrap().is_empty());
    }

    fn line_of(e: Result<impl std::fmt::Debug>) -> usize {
        match e {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(line_of(parse_array("3\n1 x 3\n")), 2);
        assert_eq!(line_of(parse_array("3\n1 2\n")), 2);
        assert_eq!(line_of(parse_queries("1 2\n\n1 2 3\n", None)), 3);
        assert_eq!(line_of(parse_queries("1 2\n2 4\n", Some(3))), 2);
        assert_eq!(line_of(parse_queries("1 1\n1 1 2 2\n", None)), 2);
        assert_eq!(line_of(parse_queries("1 2 2 3\n", Some(3))), 1);
        assert_eq!(line_of(parse_graph("3 2\n1 2\n2 2\n")), 3);
        assert_eq!(line_of(parse_graph("3 2\n1 2\n1 4\n")), 3);
        assert_eq!(line_of(parse_graph("3 2\n1 2\n2 1\n")), 3);
        assert_eq!(line_of(parse_matrix("2 2\n1 2\n3\n")), 3);
        assert_eq!(line_of(parse_matrix("")), 1);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(parse_array("2\n8 -8\n").is_ok());
        assert!(matches!(parse_array("2\n9 0\n"), Err(Error::Input(_))));
    }
}
