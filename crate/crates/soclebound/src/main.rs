use std::ffi::OsString;

fn main() {
    let args: Vec<OsString> = std::env::args_os().collect();
    let code = std::panic::catch_unwind(move || {
        let mut out = std::io::stdout();
        let mut err = std::io::stderr();
        soclebound::cli::run(args, &mut out, &mut err)
    })
    .unwrap_or_else(|_| {
        eprintln!("error: internal invariant violation");
        1
    });
    std::process::exit(code);
}
