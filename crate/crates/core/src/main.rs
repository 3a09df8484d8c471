fn main() {
    std::process::exit(pascal_det::cli::run());
}
