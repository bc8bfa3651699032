fn main() {
    std::process::exit(u3atlas::cli::run());
}
