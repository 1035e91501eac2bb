fn main() {
    std::process::exit(spantree::cli::run());
}
