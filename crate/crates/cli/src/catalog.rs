//! On-disk certificate catalog: one `<name>.hrc` file per certificate.

use std::path::PathBuf;

use anyhow::Context;
use ramseylab::format::parse_coloring;
use ramseylab::Coloring;

use crate::fail::bad_input;

pub const ENV: &str = "RAMSEYLAB_CATALOG";

pub fn dir() -> PathBuf {
    match std::env::var_os(ENV) {
        Some(d) => PathBuf::from(d),
        None => PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/catalog")),
    }
}

pub fn path(name: &str) -> PathBuf {
    dir().join(format!("{name}.hrc"))
}

/// Load a certificate from the catalog directory. Falls back to rebuilding it
/// only when the default directory is missing and no override is set.
pub fn load(name: &str) -> anyhow::Result<Coloring> {
    let p = path(name);
    if !p.exists() && std::env::var_os(ENV).is_none() && !dir().exists() {
        return Ok(ramseylab::certificate(name)?);
    }
    if !p.exists() {
        return Err(bad_input(format!(
            "no catalog certificate {name:?} in {}",
            dir().display()
        )));
    }
    let text = std::fs::read_to_string(&p).with_context(|| format!("reading {}", p.display()))?;
    let c = parse_coloring(&text).with_context(|| p.display().to_string())?;
    Ok(c)
}
