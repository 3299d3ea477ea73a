fn main() {
    std::process::exit(cirquent::cli::run(std::env::args_os()));
}
