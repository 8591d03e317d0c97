fn main() {
    std::process::exit(emdat_wrangler::cli::main_with_args(std::env::args_os()));
}
