fn main() {
    std::process::exit(spinor_lfunc::run(std::env::args_os()));
}
