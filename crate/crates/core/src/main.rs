fn main() {
    std::process::exit(tricohom::cli::run());
}
