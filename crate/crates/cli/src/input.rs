//! Reading instances from a file, stdin, or a seed.

use std::io::Read;
use std::path::Path;

use wofc::generate::{random_complex, random_forest, random_graph, seeded};
use wofc::{parse_complex, parse_graph, Graph, SimplicialComplex};

use crate::Failure;

/// Size bounds of seeded instances: facets (or edges) and vertices.
pub const SEEDED_FACETS: usize = 5;
pub const SEEDED_VERTICES: usize = 8;

fn read(path: Option<&Path>) -> Result<String, Failure> {
    let mut text = String::new();
    match path {
        Some(p) if p != Path::new("-") => {
            text = std::fs::read_to_string(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?;
        }
        _ => {
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        }
    }
    Ok(text)
}

fn warn(warnings: &[String]) {
    for w in warnings {
        eprintln!("warning: {w}");
    }
}

fn no_input_with_seed(path: Option<&Path>) -> Result<(), Failure> {
    match path {
        Some(p) => Err(Failure::Input(format!("--seed replaces the input, but {} was given", p.display()))),
        None => Ok(()),
    }
}

/// `seed` carries the seed and whether to draw a forest.
pub fn complex(path: Option<&Path>, seed: Option<(u64, bool)>) -> Result<SimplicialComplex, Failure> {
    if let Some((seed, forest)) = seed {
        no_input_with_seed(path)?;
        let mut rng = seeded(seed);
        let cx = if forest {
            random_forest(&mut rng, SEEDED_FACETS, SEEDED_VERTICES)
        } else {
            random_complex(&mut rng, SEEDED_FACETS, SEEDED_VERTICES)
        };
        eprintln!("# seed {seed}: {cx:?}");
        return Ok(cx);
    }
    let parsed = parse_complex(&read(path)?)?;
    warn(&parsed.warnings);
    Ok(parsed.complex)
}

pub fn graph(path: Option<&Path>, seed: Option<u64>) -> Result<Graph, Failure> {
    if let Some(seed) = seed {
        no_input_with_seed(path)?;
        let g = random_graph(&mut seeded(seed), SEEDED_FACETS + 3, SEEDED_VERTICES - 1);
        eprintln!("# seed {seed}: {g:?}");
        return Ok(g);
    }
    let parsed = parse_graph(&read(path)?)?;
    warn(&parsed.warnings);
    Ok(parsed.graph)
}
