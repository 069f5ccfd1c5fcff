//! Flat `key = value` config files, merged underneath explicit flags.

use std::path::Path;

use crate::error::CliError;

/// Parses `key = value` lines; `#` starts a comment, blank lines are skipped.
pub fn parse_config(text: &str) -> Result<Vec<(String, String)>, CliError> {
    let mut entries = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            CliError::Usage(format!(
                "config line {}: expected `key = value`",
                lineno + 1
            ))
        })?;
        let key = key.trim().trim_start_matches("--");
        if key.is_empty() {
            return Err(CliError::Usage(format!(
                "config line {}: empty key",
                lineno + 1
            )));
        }
        entries.push((key.to_string(), value.trim().to_string()));
    }
    Ok(entries)
}

fn flag_present(args: &[String], key: &str) -> bool {
    let flag = format!("--{key}");
    let prefix = format!("--{key}=");
    args.iter().any(|a| *a == flag || a.starts_with(&prefix))
}

/// Finds `--config <path>` (or `--config=<path>`), reads it and appends
/// every key not already given on the command line. Boolean keys become
/// bare flags when set to `true`.
pub fn merge_config(args: Vec<String>) -> Result<Vec<String>, CliError> {
    let mut path = None;
    for (i, a) in args.iter().enumerate() {
        if a == "--config" {
            path = args.get(i + 1).cloned();
        } else if let Some(p) = a.strip_prefix("--config=") {
            path = Some(p.to_string());
        }
    }
    let Some(path) = path else {
        return Ok(args);
    };
    let text = std::fs::read_to_string(Path::new(&path))
        .map_err(|e| CliError::Usage(format!("cannot read config {path}: {e}")))?;
    let mut merged = args;
    let mut extra = Vec::new();
    for (key, value) in parse_config(&text)? {
        if key == "config" || flag_present(&merged, &key) {
            continue;
        }
        match value.as_str() {
            "true" => extra.push(format!("--{key}")),
            "false" => {}
            _ => extra.push(format!("--{key}={value}")),
        }
    }
    merged.extend(extra);
    Ok(merged)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_blanks() {
        let entries = parse_config("# header\nA = 1\n\nD=-4 # trailing\n--B = 2\n").unwrap();
        assert_eq!(
            entries,
            vec![
                ("A".to_string(), "1".to_string()),
                ("D".to_string(), "-4".to_string()),
                ("B".to_string(), "2".to_string()),
            ]
        );
        assert!(parse_config("nonsense").is_err());
    }

    #[test]
    fn explicit_flags_win() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.cfg");
        std::fs::write(&path, "A = 9\nB = 2\nphysical = true\n").unwrap();
        let args: Vec<String> = [
            "radial",
            "ground",
            "--A",
            "1",
            "--config",
            path.to_str().unwrap(),
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        let merged = merge_config(args).unwrap();
        assert!(merged.contains(&"--B=2".to_string()));
        assert!(merged.contains(&"--physical".to_string()));
        assert!(!merged.iter().any(|a| a == "--A=9"));
    }
}
