//! Finitely presented groups and the presentation text format.
//!
//! Format, one directive per line (`#` starts a comment):
//!
//! ```text
//! gens: z b
//! rel: z^7
//! rel: (b^-2z)^3
//! sub gx: b^3; zb^3z; bz^2b^-1z
//! sub gz @normal-closure: w1; w2
//! ```
//!
//! A subgroup block marked `@normal-closure` designates the normal closure
//! of the listed words rather than the subgroup they generate.

use std::collections::BTreeMap;

use crate::error::AlgError;
use crate::fpgroup::word::{parse_word, Word};

/// How a list of words designates a subgroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureMode {
    /// The subgroup generated by the given words.
    AsGiven,
    /// The normal closure of the given words.
    NormalClosure,
}

#[derive(Clone, Debug)]
pub struct SubgroupSpec {
    pub generator_words: Vec<Word>,
    pub closure: ClosureMode,
}

impl SubgroupSpec {
    pub fn new(generator_words: Vec<Word>, closure: ClosureMode) -> Self {
        SubgroupSpec {
            generator_words,
            closure,
        }
    }

    pub fn trivial() -> Self {
        SubgroupSpec::new(Vec::new(), ClosureMode::AsGiven)
    }
}

#[derive(Clone, Debug)]
pub struct FpPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

impl FpPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Self {
        FpPresentation {
            generators,
            relators,
        }
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn parse_word(&self, text: &str) -> Result<Word, AlgError> {
        parse_word(text, &self.generators)
    }

    pub fn parse_words(&self, texts: &[&str]) -> Result<Vec<Word>, AlgError> {
        texts.iter().map(|t| self.parse_word(t)).collect()
    }
}

/// A presentation file: the presentation together with named subgroup blocks.
#[derive(Clone, Debug)]
pub struct PresentationFile {
    pub presentation: FpPresentation,
    pub subgroups: BTreeMap<String, SubgroupSpec>,
}

pub fn parse_presentation_file(text: &str) -> Result<PresentationFile, AlgError> {
    let mut generators: Option<Vec<String>> = None;
    let mut relator_texts: Vec<String> = Vec::new();
    let mut sub_blocks: Vec<(String, ClosureMode, String)> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| AlgError::Parse(format!("line {}: {}", lineno + 1, msg));
        if let Some(rest) = line.strip_prefix("gens:") {
            if generators.is_some() {
                return Err(err("duplicate gens: line".into()));
            }
            let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
            if names.is_empty() {
                return Err(err("gens: line lists no generators".into()));
            }
            generators = Some(names);
        } else if let Some(rest) = line.strip_prefix("rel:") {
            relator_texts.push(rest.trim().to_string());
        } else if let Some(rest) = line.strip_prefix("sub ") {
            let (head, body) = rest
                .split_once(':')
                .ok_or_else(|| err("sub line missing ':'".into()))?;
            let mut head_parts = head.split_whitespace();
            let name = head_parts
                .next()
                .ok_or_else(|| err("sub line missing name".into()))?
                .to_string();
            let mut closure = ClosureMode::AsGiven;
            for flag in head_parts {
                if flag == "@normal-closure" {
                    closure = ClosureMode::NormalClosure;
                } else {
                    return Err(err(format!("unknown subgroup flag '{}'", flag)));
                }
            }
            sub_blocks.push((name, closure, body.to_string()));
        } else {
            return Err(err(format!("unrecognized directive '{}'", line)));
        }
    }

    let generators =
        generators.ok_or_else(|| AlgError::Parse("presentation file has no gens: line".into()))?;
    let relators = relator_texts
        .iter()
        .map(|t| parse_word(t, &generators))
        .collect::<Result<Vec<_>, _>>()?;
    let mut subgroups = BTreeMap::new();
    for (name, closure, body) in sub_blocks {
        let words = body
            .split(';')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|t| parse_word(t, &generators))
            .collect::<Result<Vec<_>, _>>()?;
        if subgroups
            .insert(name.clone(), SubgroupSpec::new(words, closure))
            .is_some()
        {
            return Err(AlgError::Parse(format!("duplicate subgroup '{}'", name)));
        }
    }
    Ok(PresentationFile {
        presentation: FpPresentation::new(generators, relators),
        subgroups,
    })
}

pub fn format_presentation_file(file: &PresentationFile) -> String {
    let mut out = String::new();
    out.push_str("gens:");
    for g in &file.presentation.generators {
        out.push(' ');
        out.push_str(g);
    }
    out.push('\n');
    for r in &file.presentation.relators {
        out.push_str(&format!("rel: {}\n", r));
    }
    for (name, spec) in &file.subgroups {
        let flag = match spec.closure {
            ClosureMode::AsGiven => "",
            ClosureMode::NormalClosure => " @normal-closure",
        };
        let words: Vec<String> = spec.generator_words.iter().map(|w| w.to_string()).collect();
        out.push_str(&format!("sub {}{}: {}\n", name, flag, words.join("; ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# test file
gens: z b
rel: z^7
rel: (b^-2z)^3
sub gx: b^3; zb^3z; bz^2b^-1z
sub gz @normal-closure: b^3zb^3z^-1
";

    #[test]
    fn parse_sample() {
        let file = parse_presentation_file(SAMPLE).unwrap();
        assert_eq!(file.presentation.generators, vec!["z", "b"]);
        assert_eq!(file.presentation.relators.len(), 2);
        assert_eq!(file.subgroups["gx"].generator_words.len(), 3);
        assert_eq!(file.subgroups["gx"].closure, ClosureMode::AsGiven);
        assert_eq!(file.subgroups["gz"].closure, ClosureMode::NormalClosure);
    }

    #[test]
    fn roundtrip() {
        let file = parse_presentation_file(SAMPLE).unwrap();
        let text = format_presentation_file(&file);
        let again = parse_presentation_file(&text).unwrap();
        assert_eq!(
            file.presentation.relators,
            again.presentation.relators
        );
        assert_eq!(
            file.subgroups["gx"].generator_words,
            again.subgroups["gx"].generator_words
        );
    }

    #[test]
    fn missing_gens_rejected() {
        assert!(parse_presentation_file("rel: z^2\n").is_err());
    }

    #[test]
    fn bad_directive_rejected() {
        assert!(parse_presentation_file("gens: a\nfrobnicate: a\n").is_err());
    }
}
