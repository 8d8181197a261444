fn main() {
    std::process::exit(bso_motivic::cli::run(std::env::args_os()));
}
