fn main() {
    std::process::exit(trirange::lab::cli::main());
}
