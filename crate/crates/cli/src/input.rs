//! Reading ideals, lattices and graphs from files or stdin.
//!
//! JSON objects are told apart by their keys (`covers`, `edges`, `gens`);
//! anything else is ideal text.

use std::fs;
use std::io::Read;

use anyhow::{anyhow, bail, Context, Result};
use lcm_lattice::constructions::{fixture, Fixture};
use lcm_lattice::{phan_ideal, FiniteLattice, Graph, GraphJson, IdealJson, LatticeJson, MonomialIdeal};

#[allow(clippy::large_enum_variant)]
pub enum Input {
    Ideal(MonomialIdeal),
    Lattice(FiniteLattice),
    Graph(Graph),
}

/// Reads a path, or stdin for `-`.
pub fn read_source(path: &str) -> Result<String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .context("reading stdin")?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

pub fn parse_input(text: &str) -> Result<Input> {
    if !text.trim_start().starts_with('{') {
        return Ok(Input::Ideal(MonomialIdeal::parse_text(text)?));
    }
    let value: serde_json::Value = serde_json::from_str(text).context("parsing JSON input")?;
    let has = |k: &str| value.get(k).is_some();
    if has("covers") {
        let json: LatticeJson = serde_json::from_value(value)?;
        Ok(Input::Lattice(json.into_lattice()?))
    } else if has("edges") {
        let json: GraphJson = serde_json::from_value(value)?;
        Ok(Input::Graph(Graph::from_json(&json)?))
    } else if has("gens") {
        let json: IdealJson = serde_json::from_value(value)?;
        Ok(Input::Ideal(MonomialIdeal::from_json(json)?))
    } else {
        bail!("JSON input needs a \"covers\", \"edges\" or \"gens\" key")
    }
}

pub fn load(path: &str) -> Result<Input> {
    parse_input(&read_source(path)?).with_context(|| format!("in {}", display_path(path)))
}

/// Lattices become their Phan ideal and graphs their edge ideal.
pub fn load_ideal(path: &str) -> Result<MonomialIdeal> {
    Ok(match load(path)? {
        Input::Ideal(i) => i,
        Input::Lattice(l) => phan_ideal(&l)?,
        Input::Graph(g) => g.edge_ideal()?,
    })
}

/// Ideals and graphs become their LCM lattice.
pub fn load_lattice(path: &str) -> Result<FiniteLattice> {
    Ok(match load(path)? {
        Input::Lattice(l) => l,
        Input::Ideal(i) => i.lcm_lattice(),
        Input::Graph(g) => g.lcm_lattice()?,
    })
}

/// A graph from a file or a named fixture.
pub fn load_graph(path: Option<&str>, fixture_id: Option<&str>) -> Result<Graph> {
    match (path, fixture_id) {
        (_, Some(id)) => match fixture(id) {
            Some(Fixture::Graph(g)) => Ok(g),
            Some(Fixture::Lattice(_)) => Err(anyhow!("fixture {id} is a lattice, not a graph")),
            None => Err(anyhow!("unknown fixture {id}")),
        },
        (Some(p), None) => match load(p)? {
            Input::Graph(g) => Ok(g),
            _ => Err(anyhow!("{} does not hold a graph", display_path(p))),
        },
        (None, None) => Err(anyhow!("give a graph file or --fixture")),
    }
}

fn display_path(path: &str) -> &str {
    if path == "-" {
        "stdin"
    } else {
        path
    }
}
