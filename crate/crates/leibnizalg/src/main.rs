fn main() {
    std::process::exit(leibnizalg::cli::main_entry(std::env::args_os()));
}
