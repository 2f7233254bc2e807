fn main() {
    std::process::exit(mpn_radio::io::cli::run(std::env::args_os()));
}
