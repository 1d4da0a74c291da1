fn main() {
    std::process::exit(permident::cli::run(std::env::args_os()));
}
