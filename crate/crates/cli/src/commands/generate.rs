//! `caprng generate`: raw little-endian 32-bit words, no header or footer,
//! byte-exact for a fixed generator and seed. The chosen seeds are echoed to
//! stderr so entropy-seeded runs stay replayable.

use crate::selection::{seed_to_hex, Context, SeedArgs, SpecArgs};
use anyhow::{Context as _, Result};
use clap::Args;
use std::io::{BufWriter, ErrorKind, Write};

#[derive(Args, Debug)]
pub struct GenerateArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[command(flatten)]
    pub seeds: SeedArgs,
    /// Number of 32-bit words to emit; omit to stream until the sink closes
    #[arg(long)]
    pub count: Option<u64>,
    /// Output file (default: standard output)
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

pub fn run(ctx: &Context, args: GenerateArgs) -> Result<()> {
    let (spec, ids) = args.spec.build(ctx)?;
    let seeds = args.seeds.materialize(&spec)?;
    let mut state = spec.seed(&seeds)?;
    eprint!(
        "generator: {} s={} w={}",
        ids.join("+"),
        spec.spacing(),
        spec.output_width()
    );
    for (j, s) in seeds.iter().enumerate() {
        eprint!(" seed{}={}", j + 1, seed_to_hex(s));
    }
    eprintln!();

    let sink: Box<dyn Write> = match &args.out {
        Some(path) => {
            Box::new(std::fs::File::create(path).with_context(|| format!("creating {path:?}"))?)
        }
        None => Box::new(std::io::stdout().lock()),
    };
    let mut out = BufWriter::with_capacity(1 << 16, sink);
    let mut emitted = 0u64;
    loop {
        if let Some(limit) = args.count {
            if emitted >= limit {
                break;
            }
        }
        let word = spec.next(&mut state);
        match out.write_all(&word.to_le_bytes()) {
            Ok(()) => {}
            // a closed pipe is the consumer saying "enough"
            Err(e) if e.kind() == ErrorKind::BrokenPipe => return Ok(()),
            Err(e) => return Err(e.into()),
        }
        emitted += 1;
    }
    out.flush().map_err(|e| {
        if e.kind() == ErrorKind::BrokenPipe {
            anyhow::anyhow!("sink closed early")
        } else {
            e.into()
        }
    })?;
    Ok(())
}
