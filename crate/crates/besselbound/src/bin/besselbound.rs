fn main() {
    std::process::exit(besselbound::run(std::env::args_os()));
}
