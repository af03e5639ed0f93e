fn main() {
    std::process::exit(fuzzynet::cli::main());
}
