fn main() {
    std::process::exit(mlocus::cli::main_entry());
}
