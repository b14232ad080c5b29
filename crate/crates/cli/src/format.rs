//! Record codecs. Three formats, one record per line:
//!
//! * `json` — serde-encoded objects, the schema-stable interchange form;
//! * `csv` — kind-first fixed columns per kind, lists joined with `;`,
//!   eigenvalue pairs as `plus/minus`, empty field = absent;
//! * `text` — aligned `key=value` tokens for terminals, `provenance` last
//!   (it may contain spaces).
//!
//! Every format decodes back to the identical [`OutputRecord`].

use crate::record::{OutputRecord, Payload};
use crate::CodecError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl Format {
    pub fn name(&self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "text",
        }
    }
}

pub fn encode(record: &OutputRecord, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(record).expect("record serializes"),
        Format::Csv => encode_csv(record),
        Format::Text => encode_text(record),
    }
}

pub fn decode(line: &str, format: Format) -> Result<OutputRecord, CodecError> {
    match format {
        Format::Json => Ok(serde_json::from_str(line)?),
        Format::Csv => decode_csv(line),
        Format::Text => decode_text(line),
    }
}

fn join_ints(values: &[i64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(";")
}

fn parse_ints(field: &str, format: &'static str) -> Result<Vec<i64>, CodecError> {
    field
        .split(';')
        .map(|tok| {
            tok.parse::<i64>()
                .map_err(|_| CodecError::malformed(format, format!("bad integer {tok:?}")))
        })
        .collect()
}

fn parse_fixed<const N: usize>(field: &str, format: &'static str) -> Result<[i64; N], CodecError> {
    let v = parse_ints(field, format)?;
    v.try_into()
        .map_err(|_| CodecError::malformed(format, format!("expected {N} integers")))
}

fn join_pairs(pairs: &[[i64; 2]]) -> String {
    pairs
        .iter()
        .map(|p| format!("{}/{}", p[0], p[1]))
        .collect::<Vec<_>>()
        .join(";")
}

fn parse_pairs(field: &str, format: &'static str) -> Result<Vec<[i64; 2]>, CodecError> {
    if field.is_empty() {
        return Ok(Vec::new());
    }
    field
        .split(';')
        .map(|tok| {
            let (a, b) = tok
                .split_once('/')
                .ok_or_else(|| CodecError::malformed(format, format!("bad pair {tok:?}")))?;
            Ok([
                a.parse::<i64>()
                    .map_err(|_| CodecError::malformed(format, format!("bad pair {tok:?}")))?,
                b.parse::<i64>()
                    .map_err(|_| CodecError::malformed(format, format!("bad pair {tok:?}")))?,
            ])
        })
        .collect()
}

fn parse_bool(field: &str, format: &'static str) -> Result<bool, CodecError> {
    match field {
        "true" => Ok(true),
        "false" => Ok(false),
        other => Err(CodecError::malformed(
            format,
            format!("bad boolean {other:?}"),
        )),
    }
}

fn join_strings(items: &[String]) -> String {
    items.join(";")
}

fn split_strings(field: &str) -> Vec<String> {
    if field.is_empty() {
        Vec::new()
    } else {
        field.split(';').map(str::to_string).collect()
    }
}

// ---------------------------------------------------------------- csv

fn csv_quote(field: &str) -> String {
    if field.contains(',') || field.contains('"') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn csv_split(line: &str) -> Result<Vec<String>, CodecError> {
    let mut fields = Vec::new();
    let mut current = String::new();
    let mut chars = line.chars().peekable();
    let mut quoted = false;
    while let Some(c) = chars.next() {
        if quoted {
            if c == '"' {
                if chars.peek() == Some(&'"') {
                    chars.next();
                    current.push('"');
                } else {
                    quoted = false;
                }
            } else {
                current.push(c);
            }
        } else {
            match c {
                '"' if current.is_empty() => quoted = true,
                ',' => fields.push(std::mem::take(&mut current)),
                _ => current.push(c),
            }
        }
    }
    if quoted {
        return Err(CodecError::malformed("csv", "unterminated quote"));
    }
    fields.push(current);
    Ok(fields)
}

fn opt(field: &str) -> Option<&str> {
    (!field.is_empty()).then_some(field)
}

fn encode_csv(record: &OutputRecord) -> String {
    let provenance = record.provenance.as_deref().unwrap_or("");
    let fields: Vec<String> = match &record.payload {
        Payload::Triple { r, s, t, primitive } => vec![
            "triple".into(),
            r.to_string(),
            s.to_string(),
            t.to_string(),
            primitive.to_string(),
        ],
        Payload::Quad {
            entries,
            multiset,
            eigen_classes,
        } => vec![
            "quad".into(),
            join_ints(entries),
            join_ints(multiset),
            join_pairs(eigen_classes),
        ],
        Payload::Report {
            dim,
            coefficients,
            arrangements,
            all_pass,
            classes,
            verdicts,
            spectrum,
            first_failure,
        } => vec![
            "report".into(),
            dim.to_string(),
            join_ints(coefficients),
            arrangements.to_string(),
            all_pass.to_string(),
            classes.as_deref().map(join_strings).unwrap_or_default(),
            verdicts.as_deref().map(join_strings).unwrap_or_default(),
            spectrum.map(|s| join_ints(&s)).unwrap_or_default(),
            first_failure.as_deref().map(join_ints).unwrap_or_default(),
        ],
        Payload::SearchRecord {
            dim,
            coefficients,
            classification,
            ansatz_t,
            ansatz_diag,
            ansatz_off,
            square_root,
            eigen_classes,
            trivial,
            spectrum,
        } => vec![
            "search-record".into(),
            dim.to_string(),
            join_ints(coefficients),
            classification.clone().unwrap_or_default(),
            ansatz_t.map(|t| t.to_string()).unwrap_or_default(),
            ansatz_diag.map(|d| join_ints(&d)).unwrap_or_default(),
            ansatz_off.map(|o| join_ints(&o)).unwrap_or_default(),
            square_root.map(|r| r.to_string()).unwrap_or_default(),
            eigen_classes.as_deref().map(join_pairs).unwrap_or_default(),
            trivial.map(|t| t.to_string()).unwrap_or_default(),
            spectrum.map(|s| join_ints(&s)).unwrap_or_default(),
        ],
    };
    let mut out = fields.join(",");
    out.push(',');
    out.push_str(&csv_quote(provenance));
    out
}

fn decode_csv(line: &str) -> Result<OutputRecord, CodecError> {
    const F: &str = "csv";
    let fields = csv_split(line)?;
    let expect = |n: usize| -> Result<(), CodecError> {
        if fields.len() == n {
            Ok(())
        } else {
            Err(CodecError::malformed(
                F,
                format!("expected {n} fields, got {}", fields.len()),
            ))
        }
    };
    let parse_i64 = |s: &str| -> Result<i64, CodecError> {
        s.parse()
            .map_err(|_| CodecError::malformed(F, format!("bad integer {s:?}")))
    };
    let payload = match fields[0].as_str() {
        "triple" => {
            expect(6)?;
            Payload::Triple {
                r: parse_i64(&fields[1])?,
                s: parse_i64(&fields[2])?,
                t: parse_i64(&fields[3])?,
                primitive: parse_bool(&fields[4], F)?,
            }
        }
        "quad" => {
            expect(5)?;
            Payload::Quad {
                entries: parse_fixed::<4>(&fields[1], F)?,
                multiset: parse_fixed::<4>(&fields[2], F)?,
                eigen_classes: parse_pairs(&fields[3], F)?,
            }
        }
        "report" => {
            expect(10)?;
            Payload::Report {
                dim: parse_i64(&fields[1])? as u8,
                coefficients: parse_ints(&fields[2], F)?,
                arrangements: parse_i64(&fields[3])? as u64,
                all_pass: parse_bool(&fields[4], F)?,
                classes: opt(&fields[5]).map(split_strings),
                verdicts: opt(&fields[6]).map(split_strings),
                spectrum: opt(&fields[7])
                    .map(|f| parse_fixed::<3>(f, F))
                    .transpose()?,
                first_failure: opt(&fields[8]).map(|f| parse_ints(f, F)).transpose()?,
            }
        }
        "search-record" => {
            expect(12)?;
            Payload::SearchRecord {
                dim: parse_i64(&fields[1])? as u8,
                coefficients: parse_ints(&fields[2], F)?,
                classification: opt(&fields[3]).map(str::to_string),
                ansatz_t: opt(&fields[4]).map(parse_i64).transpose()?,
                ansatz_diag: opt(&fields[5])
                    .map(|f| parse_fixed::<2>(f, F))
                    .transpose()?,
                ansatz_off: opt(&fields[6])
                    .map(|f| parse_fixed::<2>(f, F))
                    .transpose()?,
                square_root: opt(&fields[7]).map(parse_i64).transpose()?,
                eigen_classes: opt(&fields[8]).map(|f| parse_pairs(f, F)).transpose()?,
                trivial: opt(&fields[9]).map(|f| parse_bool(f, F)).transpose()?,
                spectrum: opt(&fields[10])
                    .map(|f| parse_fixed::<3>(f, F))
                    .transpose()?,
            }
        }
        other => {
            return Err(CodecError::malformed(F, format!("unknown kind {other:?}")));
        }
    };
    let provenance = fields
        .last()
        .filter(|p| !p.is_empty())
        .map(|p| p.to_string());
    Ok(OutputRecord {
        payload,
        provenance,
    })
}

// --------------------------------------------------------------- text

fn encode_text(record: &OutputRecord) -> String {
    let mut tokens: Vec<String> = Vec::new();
    match &record.payload {
        Payload::Triple { r, s, t, primitive } => {
            tokens.push(format!("{:<13}", "triple"));
            tokens.push(format!("r={r}"));
            tokens.push(format!("s={s}"));
            tokens.push(format!("t={t}"));
            tokens.push(format!("primitive={primitive}"));
        }
        Payload::Quad {
            entries,
            multiset,
            eigen_classes,
        } => {
            tokens.push(format!("{:<13}", "quad"));
            tokens.push(format!("entries={}", join_ints(entries)));
            tokens.push(format!("multiset={}", join_ints(multiset)));
            tokens.push(format!("eigen_classes={}", join_pairs(eigen_classes)));
        }
        Payload::Report {
            dim,
            coefficients,
            arrangements,
            all_pass,
            classes,
            verdicts,
            spectrum,
            first_failure,
        } => {
            tokens.push(format!("{:<13}", "report"));
            tokens.push(format!("dim={dim}"));
            tokens.push(format!("coefficients={}", join_ints(coefficients)));
            tokens.push(format!("arrangements={arrangements}"));
            tokens.push(format!("all_pass={all_pass}"));
            if let Some(classes) = classes {
                tokens.push(format!("classes={}", join_strings(classes)));
            }
            if let Some(verdicts) = verdicts {
                tokens.push(format!("verdicts={}", join_strings(verdicts)));
            }
            if let Some(spectrum) = spectrum {
                tokens.push(format!("spectrum={}", join_ints(spectrum)));
            }
            if let Some(failure) = first_failure {
                tokens.push(format!("first_failure={}", join_ints(failure)));
            }
        }
        Payload::SearchRecord {
            dim,
            coefficients,
            classification,
            ansatz_t,
            ansatz_diag,
            ansatz_off,
            square_root,
            eigen_classes,
            trivial,
            spectrum,
        } => {
            tokens.push(format!("{:<13}", "search-record"));
            tokens.push(format!("dim={dim}"));
            tokens.push(format!("coefficients={}", join_ints(coefficients)));
            if let Some(c) = classification {
                tokens.push(format!("classification={c}"));
            }
            if let Some(t) = ansatz_t {
                tokens.push(format!("ansatz_t={t}"));
            }
            if let Some(d) = ansatz_diag {
                tokens.push(format!("ansatz_diag={}", join_ints(d)));
            }
            if let Some(o) = ansatz_off {
                tokens.push(format!("ansatz_off={}", join_ints(o)));
            }
            if let Some(r) = square_root {
                tokens.push(format!("square_root={r}"));
            }
            if let Some(e) = eigen_classes {
                tokens.push(format!("eigen_classes={}", join_pairs(e)));
            }
            if let Some(t) = trivial {
                tokens.push(format!("trivial={t}"));
            }
            if let Some(s) = spectrum {
                tokens.push(format!("spectrum={}", join_ints(s)));
            }
        }
    }
    if let Some(p) = &record.provenance {
        tokens.push(format!("provenance={p}"));
    }
    tokens.join(" ")
}

fn decode_text(line: &str) -> Result<OutputRecord, CodecError> {
    const F: &str = "text";
    // provenance is the last token and may contain spaces: cut it off first.
    let (head, provenance) = match line.find(" provenance=") {
        Some(pos) => (
            &line[..pos],
            Some(line[pos + " provenance=".len()..].to_string()),
        ),
        None => (line, None),
    };
    let mut tokens = head.split_whitespace();
    let kind = tokens
        .next()
        .ok_or_else(|| CodecError::malformed(F, "empty line"))?;
    let mut map: Vec<(String, String)> = Vec::new();
    for token in tokens {
        let (key, value) = token
            .split_once('=')
            .ok_or_else(|| CodecError::malformed(F, format!("bad token {token:?}")))?;
        map.push((key.to_string(), value.to_string()));
    }
    let get =
        |key: &str| -> Option<&str> { map.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str()) };
    let need = |key: &str| -> Result<&str, CodecError> {
        get(key).ok_or_else(|| CodecError::malformed(F, format!("missing field {key}")))
    };
    let parse_i64 = |s: &str| -> Result<i64, CodecError> {
        s.parse()
            .map_err(|_| CodecError::malformed(F, format!("bad integer {s:?}")))
    };

    let payload = match kind {
        "triple" => Payload::Triple {
            r: parse_i64(need("r")?)?,
            s: parse_i64(need("s")?)?,
            t: parse_i64(need("t")?)?,
            primitive: parse_bool(need("primitive")?, F)?,
        },
        "quad" => Payload::Quad {
            entries: parse_fixed::<4>(need("entries")?, F)?,
            multiset: parse_fixed::<4>(need("multiset")?, F)?,
            eigen_classes: parse_pairs(need("eigen_classes")?, F)?,
        },
        "report" => Payload::Report {
            dim: parse_i64(need("dim")?)? as u8,
            coefficients: parse_ints(need("coefficients")?, F)?,
            arrangements: parse_i64(need("arrangements")?)? as u64,
            all_pass: parse_bool(need("all_pass")?, F)?,
            classes: get("classes").map(split_strings),
            verdicts: get("verdicts").map(split_strings),
            spectrum: get("spectrum")
                .map(|f| parse_fixed::<3>(f, F))
                .transpose()?,
            first_failure: get("first_failure").map(|f| parse_ints(f, F)).transpose()?,
        },
        "search-record" => Payload::SearchRecord {
            dim: parse_i64(need("dim")?)? as u8,
            coefficients: parse_ints(need("coefficients")?, F)?,
            classification: get("classification").map(str::to_string),
            ansatz_t: get("ansatz_t").map(parse_i64).transpose()?,
            ansatz_diag: get("ansatz_diag")
                .map(|f| parse_fixed::<2>(f, F))
                .transpose()?,
            ansatz_off: get("ansatz_off")
                .map(|f| parse_fixed::<2>(f, F))
                .transpose()?,
            square_root: get("square_root").map(parse_i64).transpose()?,
            eigen_classes: get("eigen_classes")
                .map(|f| parse_pairs(f, F))
                .transpose()?,
            trivial: get("trivial").map(|f| parse_bool(f, F)).transpose()?,
            spectrum: get("spectrum")
                .map(|f| parse_fixed::<3>(f, F))
                .transpose()?,
        },
        other => {
            return Err(CodecError::malformed(F, format!("unknown kind {other:?}")));
        }
    };
    Ok(OutputRecord {
        payload,
        provenance,
    })
}
