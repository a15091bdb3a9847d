//! Test support: running the binary and validating JSON output against the
//! shipped schemas (a small draft-07 subset validator — types, enums,
//! required/properties/additionalProperties, items with length bounds,
//! oneOf, and local $ref).

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

pub fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_meyniel-lab"))
}

pub fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

pub fn run_ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

pub fn schema_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas")
}

pub fn load_schema(name: &str) -> Value {
    let path = schema_dir().join(name);
    let data = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("schema {} unreadable: {e}", path.display()));
    serde_json::from_str(&data).expect("schema parses")
}

pub fn assert_valid(schema_file: &str, value: &Value) {
    let schema = load_schema(schema_file);
    if let Err(reason) = validate(&schema, &schema, value, "$") {
        panic!("{schema_file} violation: {reason}\nvalue: {value:#}");
    }
}

fn resolve<'a>(root: &'a Value, reference: &str) -> &'a Value {
    let path = reference
        .strip_prefix("#/")
        .unwrap_or_else(|| panic!("unsupported $ref {reference}"));
    path.split('/')
        .fold(root, |node, key| &node[key])
}

fn type_matches(ty: &str, value: &Value) -> bool {
    match ty {
        "object" => value.is_object(),
        "array" => value.is_array(),
        "string" => value.is_string(),
        "integer" => value.is_i64() || value.is_u64(),
        "number" => value.is_number(),
        "boolean" => value.is_boolean(),
        "null" => value.is_null(),
        other => panic!("unsupported schema type {other}"),
    }
}

pub fn validate(root: &Value, schema: &Value, value: &Value, at: &str) -> Result<(), String> {
    if let Some(reference) = schema.get("$ref").and_then(Value::as_str) {
        return validate(root, resolve(root, reference), value, at);
    }
    if let Some(one_of) = schema.get("oneOf").and_then(Value::as_array) {
        let hits = one_of
            .iter()
            .filter(|s| validate(root, s, value, at).is_ok())
            .count();
        if hits != 1 {
            return Err(format!("{at}: matched {hits} of {} oneOf branches", one_of.len()));
        }
        return Ok(());
    }
    if let Some(ty) = schema.get("type") {
        let ok = match ty {
            Value::String(s) => type_matches(s, value),
            Value::Array(options) => options
                .iter()
                .any(|t| type_matches(t.as_str().expect("type name"), value)),
            other => panic!("unsupported type spec {other}"),
        };
        if !ok {
            return Err(format!("{at}: expected type {ty}, got {value}"));
        }
    }
    if let Some(allowed) = schema.get("enum").and_then(Value::as_array) {
        if !allowed.contains(value) {
            return Err(format!("{at}: {value} not in enum {allowed:?}"));
        }
    }
    if let Some(obj) = value.as_object() {
        if let Some(required) = schema.get("required").and_then(Value::as_array) {
            for key in required {
                let key = key.as_str().expect("required key");
                if !obj.contains_key(key) {
                    return Err(format!("{at}: missing required key {key}"));
                }
            }
        }
        let props = schema.get("properties").and_then(Value::as_object);
        let additional = schema.get("additionalProperties");
        for (key, entry) in obj {
            let nested = format!("{at}.{key}");
            if let Some(prop_schema) = props.and_then(|p| p.get(key)) {
                validate(root, prop_schema, entry, &nested)?;
            } else {
                match additional {
                    Some(Value::Bool(false)) => {
                        return Err(format!("{at}: unexpected key {key}"))
                    }
                    Some(Value::Bool(true)) | None => {}
                    Some(extra_schema) => validate(root, extra_schema, entry, &nested)?,
                }
            }
        }
    }
    if let Some(arr) = value.as_array() {
        if let Some(min) = schema.get("minItems").and_then(Value::as_u64) {
            if (arr.len() as u64) < min {
                return Err(format!("{at}: fewer than {min} items"));
            }
        }
        if let Some(max) = schema.get("maxItems").and_then(Value::as_u64) {
            if (arr.len() as u64) > max {
                return Err(format!("{at}: more than {max} items"));
            }
        }
        if let Some(item_schema) = schema.get("items") {
            for (i, item) in arr.iter().enumerate() {
                validate(root, item_schema, item, &format!("{at}[{i}]"))?;
            }
        }
    }
    Ok(())
}
