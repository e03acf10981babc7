fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (status, text) = ordtruth_cli::run(&args);
    if status == 0 {
        print!("{text}");
    } else {
        eprint!("{text}");
    }
    std::process::exit(status);
}
