fn main() {
    std::process::exit(quip::cli::main());
}
