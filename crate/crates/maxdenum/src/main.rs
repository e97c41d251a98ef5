fn main() {
    std::process::exit(maxdenum::cli::run());
}
