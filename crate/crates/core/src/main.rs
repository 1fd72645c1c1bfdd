fn main() {
    std::process::exit(setwise_ekr::cli::dispatch(std::env::args_os()));
}
