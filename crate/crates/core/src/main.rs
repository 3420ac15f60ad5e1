fn main() {
    std::process::exit(envelope_circle::cli::main());
}
