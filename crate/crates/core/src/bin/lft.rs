fn main() {
    std::process::exit(lft_mech::cli::run(std::env::args_os()));
}
