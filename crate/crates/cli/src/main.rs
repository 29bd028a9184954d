use std::fs;
use std::net::SocketAddr;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use trellis::diff::compute_edit_script;
use trellis::edit::{plan, EditOperation, StructuredEditRequest};
use trellis::instrument::{serve as serve_collector, Collector, DEFAULT_PORT};
use trellis::service::{replay, serve_stdio, serve_tcp, ReplayScript, Server, Service};
use trellis::syntax::{parse_document, Span};
use trellis::tools::{bundled, Manifest};
use trellis::transaction::Intents;

#[derive(Parser)]
#[command(name = "engine", version, about = "Hybrid structured editing engine")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Serve the session protocol over TCP (or stdio) with a value collector.
    Serve {
        #[arg(long, default_value_t = 7070)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: String,
        /// Speak the protocol on stdin/stdout instead of a socket.
        #[arg(long)]
        stdio: bool,
        /// Port of the HTTP value collector; 0 disables it.
        #[arg(long, default_value_t = DEFAULT_PORT)]
        collector_port: u16,
        /// Tool manifest to use instead of the bundled one.
        #[arg(long)]
        tools: Option<PathBuf>,
    },
    /// Run a replay script and print its trace.
    Replay {
        script: PathBuf,
        /// Write the trace here instead of stdout.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Apply one structured edit to a file and print the result.
    Edit {
        file: PathBuf,
        #[arg(long)]
        lang: String,
        #[arg(long, value_enum)]
        op: Op,
        /// Byte range of the target node, `start..end`.
        #[arg(long)]
        at: String,
        #[arg(long, allow_hyphen_values = true)]
        text: Option<String>,
        #[arg(long)]
        index: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        prefix: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        suffix: Option<String>,
        /// Overwrite the file instead of printing.
        #[arg(long)]
        in_place: bool,
    },
    /// Print the edit script turning one file's tree into the other's.
    Diff {
        old: PathBuf,
        new: PathBuf,
        #[arg(long)]
        lang: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Insert,
    Delete,
    Replace,
    Wrap,
}

fn read(path: &PathBuf) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn parse_range(s: &str) -> Result<Span> {
    let parse = |p: &str| p.trim().parse::<usize>().with_context(|| format!("bad offset `{p}`"));
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (parse(a)?, parse(b)?);
            if a > b {
                bail!("range {a}..{b} is reversed");
            }
            Ok(Span::new(a, b))
        }
        None => Ok(Span::empty(parse(s)?)),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Serve {
            port,
            host,
            stdio,
            collector_port,
            tools,
        } => {
            let manifest = match tools {
                Some(p) => Manifest::from_toml(&read(&p)?)?,
                None => bundled(),
            };
            serve(manifest, &host, port, stdio, collector_port)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Replay { script, trace } => {
            let script = ReplayScript::from_json(&read(&script)?)?;
            let t = replay(&script)?;
            match trace {
                Some(p) => fs::write(&p, t.to_string()).with_context(|| format!("writing {}", p.display()))?,
                None => print!("{t}"),
            }
            let failed = t.failed_asserts();
            if failed.is_empty() {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("failed assertions at steps {failed:?}");
                Ok(ExitCode::from(1))
            }
        }
        Command::Edit {
            file,
            lang,
            op,
            at,
            text,
            index,
            prefix,
            suffix,
            in_place,
        } => {
            let src = read(&file)?;
            let tree = parse_document(&src, &lang)?;
            let span = parse_range(&at)?;
            if span.end > src.len() {
                bail!("range {at} is outside the file ({} bytes)", src.len());
            }
            let target = tree.smallest_node_containing(span);
            let need = |v: Option<String>, flag: &str| v.with_context(|| format!("--{flag} is required for this op"));
            let operation = match op {
                Op::Insert => EditOperation::Insert {
                    text: need(text, "text")?,
                    index: index.context("--index is required for insert")?,
                },
                Op::Delete => EditOperation::Delete,
                Op::Replace => EditOperation::ReplaceWith { text: need(text, "text")? },
                Op::Wrap => EditOperation::WrapWith {
                    prefix: prefix.unwrap_or_default(),
                    suffix: suffix.unwrap_or_default(),
                },
            };
            let request = StructuredEditRequest {
                operation,
                target: target.id(),
                intents: Intents::default(),
            };
            let change = plan(&tree, &request).with_context(|| format!("{} at {at}", target.kind()))?;
            let mut out = src;
            change.apply(&mut out)?;
            if in_place {
                fs::write(&file, &out).with_context(|| format!("writing {}", file.display()))?;
            } else {
                print!("{out}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Diff { old, new, lang, json } => {
            let tree = parse_document(&read(&old)?, &lang)?;
            let script = compute_edit_script(&tree, &read(&new)?)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&script)?);
            } else {
                for op in &script.ops {
                    println!("{op}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn serve(manifest: Manifest, host: &str, port: u16, stdio: bool, collector_port: u16) -> Result<()> {
    let rt = tokio::runtime::Runtime::new()?;
    rt.block_on(async {
        let collector = Collector::new();
        let (tx, rx) = std::sync::mpsc::channel();
        collector.streams.lock().unwrap_or_else(|e| e.into_inner()).set_listener(tx);
        let server = Server::new(Service::new(manifest, Arc::clone(&collector.streams)));

        if collector_port != 0 {
            let addr: SocketAddr = format!("{host}:{collector_port}").parse()?;
            let handle = serve_collector(&collector, addr).await?;
            eprintln!("collecting values at {}", handle.url());
        }
        // pushes fresh state whenever a watched value arrives
        let notify = Arc::clone(&server);
        std::thread::spawn(move || {
            while let Ok(node) = rx.recv() {
                notify.notify_value(node);
            }
        });

        if stdio {
            serve_stdio(server).await?;
        } else {
            let listener = tokio::net::TcpListener::bind((host, port)).await?;
            eprintln!("listening on {}", listener.local_addr()?);
            serve_tcp(server, listener).await?;
        }
        Ok::<_, anyhow::Error>(())
    })?;
    Ok(())
}
