use clap::Parser;
use dimer_spectral_cli::{render, run, Cli};
use std::process::ExitCode;

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors.
    let cli = Cli::parse();
    match run(&cli) {
        Ok((doc, path)) => {
            let text = render(&doc);
            match path {
                Some(p) => {
                    if let Err(e) = std::fs::write(&p, text) {
                        let err = serde_json::json!({ "error": { "kind": "Io", "detail": format!("cannot write {}: {e}", p.display()) } });
                        print!("{}", render(&err));
                        return ExitCode::from(1);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            print!("{}", render(&e.to_json()));
            ExitCode::from(1)
        }
    }
}
