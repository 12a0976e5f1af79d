//! Reading a `(pairs, lambda)` document from a file, stdin, or inline flags.

use std::io::Read;
use std::path::Path;

use aqtab_core::{validate_input, InputError, LambdaParam, ParabolicDatum};
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub pairs: Vec<(usize, usize)>,
    pub lambda: Vec<i64>,
}

#[derive(Debug, Error)]
pub enum ReadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed JSON input: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed --pairs value {0:?}: expected \"p,q;p,q;...\"")]
    Pairs(String),
    #[error("malformed --lambda value {0:?}: expected \"l1,l2,...\"")]
    Lambda(String),
    #[error("give either --input or both --pairs and --lambda")]
    Missing,
    #[error(transparent)]
    Invalid(#[from] InputError),
}

impl ReadError {
    pub fn kind(&self) -> &'static str {
        match self {
            ReadError::Invalid(_) => "invalid_input",
            ReadError::Missing => "usage",
            _ => "parse",
        }
    }
}

pub fn parse_document(text: &str) -> Result<InputDocument, ReadError> {
    Ok(serde_json::from_str(text)?)
}

fn read_source(path: &Path) -> Result<String, ReadError> {
    let mut text = String::new();
    let result = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    result.map_err(|source| ReadError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(text)
}

/// `"2,1;3,1;0,2"` into `[(2,1),(3,1),(0,2)]`.
pub fn parse_pairs(s: &str) -> Result<Vec<(usize, usize)>, ReadError> {
    let bad = || ReadError::Pairs(s.to_string());
    s.split(';')
        .map(|chunk| {
            let (p, q) = chunk.split_once(',').ok_or_else(bad)?;
            Ok((
                p.trim().parse().map_err(|_| bad())?,
                q.trim().parse().map_err(|_| bad())?,
            ))
        })
        .collect()
}

pub fn parse_lambda(s: &str) -> Result<Vec<i64>, ReadError> {
    s.split(',')
        .map(|v| {
            v.trim()
                .parse()
                .map_err(|_| ReadError::Lambda(s.to_string()))
        })
        .collect()
}

pub fn load(
    input: Option<&Path>,
    pairs: Option<&str>,
    lambda: Option<&str>,
) -> Result<(ParabolicDatum, LambdaParam), ReadError> {
    let doc = match (input, pairs, lambda) {
        (Some(path), _, _) => parse_document(&read_source(path)?)?,
        (None, Some(p), Some(l)) => InputDocument {
            pairs: parse_pairs(p)?,
            lambda: parse_lambda(l)?,
        },
        _ => return Err(ReadError::Missing),
    };
    Ok(validate_input(&doc.pairs, &doc.lambda)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_flags() {
        assert_eq!(
            parse_pairs("2,1;3,1;0,2").unwrap(),
            vec![(2, 1), (3, 1), (0, 2)]
        );
        assert_eq!(parse_lambda("0, -2,4").unwrap(), vec![0, -2, 4]);
        assert!(parse_pairs("2;1").is_err());
        assert!(parse_lambda("0,x").is_err());
    }

    #[test]
    fn json_document() {
        let doc = parse_document(r#"{"pairs": [[2,1],[0,2]], "lambda": [0, 1]}"#).unwrap();
        assert_eq!(doc.pairs, vec![(2, 1), (0, 2)]);
        assert!(parse_document(r#"{"pairs": [[2,1]]}"#).is_err());
        assert!(parse_document(r#"{"pairs": [[1,1]], "lambda": [0], "x": 1}"#).is_err());
    }

    #[test]
    fn validation_errors_pass_through() {
        let err = load(None, Some("1,1;0,0"), Some("0,0")).unwrap_err();
        assert_eq!(err.kind(), "invalid_input");
        assert_eq!(load(None, Some("1,1"), None).unwrap_err().kind(), "usage");
    }
}
