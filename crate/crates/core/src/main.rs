fn main() {
    std::process::exit(symfrac::cli::run(std::env::args_os()));
}
