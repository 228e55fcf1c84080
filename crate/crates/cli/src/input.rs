use std::fs;

use serde::de::DeserializeOwned;
use serde_json::Value;

use crate::CliError;

/// Reads `arg` as inline JSON when it looks like JSON, otherwise as a file path.
pub fn load_value(arg: &str) -> Result<Value, CliError> {
    let t = arg.trim_start();
    let text = if t.starts_with('{') || t.starts_with('[') {
        arg.to_string()
    } else {
        fs::read_to_string(arg).map_err(|e| CliError::Input(format!("{arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{arg}: {e}")))
}

pub fn load<T: DeserializeOwned>(arg: &str) -> Result<T, CliError> {
    serde_json::from_value(load_value(arg)?).map_err(|e| CliError::Input(format!("{arg}: {e}")))
}

/// `"1,3,2"` or `"[1,3,2]"` as a reading word.
pub fn parse_word(s: &str) -> Result<Vec<u32>, CliError> {
    let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|e| CliError::Input(format!("bad word {s:?}: {e}"))))
        .collect()
}

/// The prime recorded in an embedding document.
pub fn embedding_prime(v: &Value) -> Result<u32, CliError> {
    v.get("p")
        .and_then(Value::as_u64)
        .map(|p| p as u32)
        .ok_or_else(|| CliError::Input("embedding is missing the field \"p\"".into()))
}
