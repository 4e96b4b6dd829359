mod args;
mod commands;
mod input;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use dgas_core::alpha::{AlphaParam, CriterionOptions};
use dgas_core::par::{self, Execution};

use args::{Cli, Command, InputFormat, OutputFormat};

/// Usage, I/O and parse errors.
pub const EXIT_INPUT: i32 = 64;

#[derive(Debug)]
pub struct Failure {
    message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure {
            message: message.into(),
        }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            message: format!("usage: {}", message.into()),
        }
    }
}

pub struct Context {
    pub alpha: AlphaParam,
    pub format: InputFormat,
    pub output: OutputFormat,
    pub exec: Execution,
    pub criterion: CriterionOptions,
}

fn run(cli: &Cli, ctx: &Context) -> Result<(String, i32), Failure> {
    match &cli.command {
        Command::Check(src) => commands::check(ctx, src),
        Command::Batch { input } => commands::batch(ctx, input),
        Command::Snf(src) => commands::snf(ctx, src),
        Command::Spectrum(src) => commands::spectrum(ctx, src),
        Command::Mates(src) => commands::mates(ctx, src),
        Command::VerifyTheorem(src) => commands::verify(ctx, src),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT as u8 } else { 0 });
        }
    };
    let g = &cli.global;
    let alpha = match g.alpha.parse::<AlphaParam>() {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT as u8);
        }
    };
    let threads = g
        .threads
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    if threads == 0 {
        eprintln!("error: --threads must be at least 1");
        return ExitCode::from(EXIT_INPUT as u8);
    }
    let ctx = Context {
        alpha,
        format: g.format,
        output: g.output,
        exec: commands::execution(threads),
        criterion: commands::options(g.seed, g.effort),
    };
    let result = par::with_threads(threads, || run(&cli, &ctx));
    match result {
        Ok((out, code)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(EXIT_INPUT as u8);
            }
            ExitCode::from(code as u8)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(EXIT_INPUT as u8)
        }
    }
}
