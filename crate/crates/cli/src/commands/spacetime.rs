//! `caprng spacetime`: space-time diagrams as P4 bitmaps. Row n is the
//! configuration after n emitted steps, so with spacing s every image row
//! advances each component s CA steps; black is a 1 cell.

use crate::pbm::PbmImage;
use crate::selection::{seed_to_hex, Context, SeedArgs, SpecArgs};
use anyhow::{bail, Context as _, Result};
use clap::{Args, ValueEnum};
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Component1,
    Component2,
    Combined,
}

#[derive(Args, Debug)]
pub struct SpacetimeArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[command(flatten)]
    pub seeds: SeedArgs,
    /// Number of image rows (emitted steps)
    #[arg(long, default_value_t = 500)]
    pub steps: usize,
    /// Which diagrams to render (default: every applicable one)
    #[arg(long, value_enum, value_delimiter = ',')]
    pub targets: Vec<Target>,
    /// Output path; with several targets the target name lands before the
    /// extension
    #[arg(long)]
    pub out: PathBuf,
}

pub fn run(ctx: &Context, args: SpacetimeArgs) -> Result<()> {
    if args.steps == 0 {
        bail!("--steps must be at least 1");
    }
    let (spec, ids) = args.spec.build(ctx)?;
    let n_components = spec.components().len();
    let targets = if args.targets.is_empty() {
        if n_components == 2 {
            vec![Target::Component1, Target::Component2, Target::Combined]
        } else {
            vec![Target::Combined]
        }
    } else {
        args.targets.clone()
    };
    if targets.contains(&Target::Component2) && n_components < 2 {
        bail!("generator has no second component");
    }

    let seeds = args.seeds.materialize(&spec)?;
    let mut state = spec.seed(&seeds)?;
    for (j, s) in seeds.iter().enumerate() {
        eprintln!("seed{}={}", j + 1, seed_to_hex(s));
    }

    let sizes = spec.component_sizes();
    let mut images: Vec<(Target, PbmImage)> = targets
        .iter()
        .map(|&t| {
            let width = match t {
                Target::Component1 => sizes[0],
                Target::Component2 => sizes[1],
                Target::Combined => spec.combined_width(),
            };
            (t, PbmImage::new(width))
        })
        .collect();

    for _ in 0..args.steps {
        spec.next(&mut state);
        for (target, image) in &mut images {
            match target {
                Target::Component1 => image.push_row(&state.configs()[0]),
                Target::Component2 => image.push_row(&state.configs()[1]),
                Target::Combined => image.push_row(&spec.combined_config(&state)),
            }
        }
    }

    for (target, image) in &images {
        let path = target_path(&args.out, *target, images.len() > 1);
        let file = std::fs::File::create(&path).with_context(|| format!("creating {path:?}"))?;
        image.write_to(std::io::BufWriter::new(file))?;
        println!(
            "{}: {}x{} ({})",
            path.display(),
            image.width(),
            image.height(),
            label(*target, &ids)
        );
    }
    Ok(())
}

fn label(t: Target, ids: &[String]) -> String {
    match t {
        Target::Component1 => format!("component 1, {}", ids[0]),
        Target::Component2 => format!("component 2, {}", ids[1]),
        Target::Combined => "combined".to_string(),
    }
}

fn target_path(base: &std::path::Path, target: Target, multi: bool) -> PathBuf {
    if !multi {
        return base.to_path_buf();
    }
    let suffix = match target {
        Target::Component1 => "component1",
        Target::Component2 => "component2",
        Target::Combined => "combined",
    };
    let stem = base
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("spacetime");
    let ext = base.extension().and_then(|s| s.to_str()).unwrap_or("pbm");
    base.with_file_name(format!("{stem}.{suffix}.{ext}"))
}
