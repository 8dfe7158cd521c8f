fn main() {
    std::process::exit(sidonium::cli::run());
}
