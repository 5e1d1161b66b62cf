fn main() {
    std::process::exit(quasihom::cli::run());
}
