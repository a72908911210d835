fn main() {
    std::process::exit(bernstein_szego::cli::run());
}
