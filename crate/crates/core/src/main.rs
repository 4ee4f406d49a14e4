fn main() {
    std::process::exit(mexlab::cli::main());
}
