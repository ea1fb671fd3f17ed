fn main() {
    eprintln!("qeclab CLI is under construction");
    std::process::exit(2);
}
