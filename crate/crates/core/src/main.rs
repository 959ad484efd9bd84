fn main() {
    std::process::exit(polyquiver::cli::run());
}
