//! Per-invocation configuration: signature, representation and output
//! format, resolved from flags > PINOR_SIGNATURE > config file > defaults.

use pinor_core::clifford::GammaRep;
use std::collections::HashMap;
use std::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone)]
pub struct Session {
    pub t: usize,
    pub s: usize,
    pub rep_name: String,
    pub rep: GammaRep,
    pub format: OutputFormat,
}

fn parse_signature(text: &str) -> Result<(usize, usize), String> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 2 {
        return Err(format!("signature must look like 't,s', got '{text}'"));
    }
    let t = parts[0]
        .parse()
        .map_err(|_| format!("bad signature component '{}'", parts[0]))?;
    let s = parts[1]
        .parse()
        .map_err(|_| format!("bad signature component '{}'", parts[1]))?;
    Ok((t, s))
}

fn read_config(path: &Path) -> Result<HashMap<String, String>, String> {
    let text =
        std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let mut map = HashMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("{}:{}: expected key=value", path.display(), lineno + 1))?;
        map.insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(map)
}

pub fn build_rep(t: usize, s: usize, name: &str) -> Result<GammaRep, String> {
    match (t, s, name) {
        (1, 3, "dirac") => Ok(GammaRep::dirac13()),
        (1, 3, "chiral") => Ok(GammaRep::chiral13()),
        (3, 1, "hat") => Ok(GammaRep::hat_from13(GammaRep::dirac13())),
        (3, 1, "majorana") => Ok(GammaRep::majorana31()),
        (t, s, "small") => GammaRep::small(t, s).map_err(|e| e.to_string()),
        _ => Err(format!("no representation '{name}' for signature ({t},{s})")),
    }
}

fn default_rep_name(t: usize, s: usize) -> &'static str {
    match (t, s) {
        (1, 3) => "dirac",
        (3, 1) => "hat",
        _ => "small",
    }
}

pub fn resolve(
    sig_flag: Option<&str>,
    rep_flag: Option<&str>,
    config_path: Option<&Path>,
    json: bool,
    csv: bool,
) -> Result<Session, String> {
    let file = match config_path {
        Some(p) => read_config(p)?,
        None => HashMap::new(),
    };
    let env_sig = std::env::var("PINOR_SIGNATURE").ok();
    let sig_text = sig_flag
        .map(str::to_string)
        .or(env_sig)
        .or_else(|| file.get("signature").cloned())
        .unwrap_or_else(|| "1,3".to_string());
    let (t, s) = parse_signature(&sig_text)?;
    let rep_name = rep_flag
        .map(str::to_string)
        .or_else(|| file.get("rep").cloned())
        .unwrap_or_else(|| default_rep_name(t, s).to_string());
    let rep = build_rep(t, s, &rep_name)?;
    let format = if json {
        OutputFormat::Json
    } else if csv {
        OutputFormat::Csv
    } else {
        match file.get("format").map(String::as_str) {
            Some("json") => OutputFormat::Json,
            Some("csv") => OutputFormat::Csv,
            _ => OutputFormat::Text,
        }
    };
    Ok(Session {
        t,
        s,
        rep_name,
        rep,
        format,
    })
}
