//! Model file loading: the polynomial text format extended with a model
//! name, dimension, action blocks and an optional branch form.
//!
//! ```text
//! name: Y
//! field: GF(43)
//! vars: x y z
//! dim: 2
//! rel: x^2 + y*z
//! branch: x^2 - 2*y^2
//! action iota: 0:1 1:1 2:-1
//! ```
//!
//! Each `action` entry `j:c` sends the k-th coordinate (in order) to
//! `c` times the j-th; scalars are integers, `z3^k`, or `z7^k`.

use crate::equivariant::action::ActionGen;
use crate::error::AlgError;
use crate::exactalg::field::{FieldElement, FieldTag};
use crate::exactalg::parse::{parse_field_tag, parse_poly, parse_var_list};
use crate::exactalg::poly::MultiPoly;
use crate::pipeline::model::VarietyModel;

#[derive(Clone, Debug)]
pub struct LoadedModel {
    pub model: VarietyModel,
    pub branch: Option<MultiPoly>,
}

fn parse_scalar(tok: &str, tag: FieldTag) -> Result<FieldElement, AlgError> {
    let (neg, body) = match tok.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, tok),
    };
    let (root, exp) = match body.split_once('^') {
        Some((r, e)) => (
            r,
            e.parse::<i64>()
                .map_err(|_| AlgError::Parse(format!("bad exponent in scalar '{tok}'")))?,
        ),
        None => (body, 1),
    };
    let value = match root {
        "z3" => FieldElement::zeta3(tag)?.pow(exp)?,
        "z7" => FieldElement::zeta7(tag)?.pow(exp)?,
        _ => {
            let n: i64 = body
                .parse()
                .map_err(|_| AlgError::Parse(format!("bad scalar '{tok}'")))?;
            FieldElement::from_integer(n, tag)
        }
    };
    Ok(if neg { value.neg() } else { value })
}

fn parse_action(
    name: &str,
    payload: &str,
    nvars: usize,
    tag: FieldTag,
) -> Result<ActionGen, AlgError> {
    let mut images = Vec::new();
    for entry in payload.split_whitespace() {
        let (j, c) = entry
            .split_once(':')
            .ok_or_else(|| AlgError::Parse(format!("bad action entry '{entry}'")))?;
        let j: usize = j
            .parse()
            .map_err(|_| AlgError::Parse(format!("bad target index in '{entry}'")))?;
        images.push((j, parse_scalar(c, tag)?));
    }
    if images.len() != nvars {
        return Err(AlgError::Parse(format!(
            "action '{name}' has {} entries for {nvars} coordinates",
            images.len()
        )));
    }
    ActionGen::new(name, tag, images)
}

pub fn load_model(text: &str) -> Result<LoadedModel, AlgError> {
    let mut name = "model".to_string();
    let mut tag: Option<FieldTag> = None;
    let mut vars: Option<Vec<String>> = None;
    let mut dim: Option<usize> = None;
    let mut ideal: Vec<MultiPoly> = Vec::new();
    let mut branch: Option<MultiPoly> = None;
    let mut actions: Vec<(String, ActionGen)> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: &str| AlgError::Parse(format!("line {}: {msg}", lineno + 1));
        let ready = |tag: &Option<FieldTag>, vars: &Option<Vec<String>>| -> Result<(FieldTag, Vec<String>), AlgError> {
            match (tag, vars) {
                (Some(t), Some(v)) => Ok((*t, v.clone())),
                _ => Err(err("field and vars must come first")),
            }
        };
        if let Some(rest) = line.strip_prefix("name:") {
            name = rest.trim().to_string();
        } else if let Some(rest) = line.strip_prefix("field:") {
            tag = Some(parse_field_tag(rest)?);
        } else if let Some(rest) = line.strip_prefix("vars:") {
            vars = Some(parse_var_list(rest)?);
        } else if let Some(rest) = line.strip_prefix("dim:") {
            dim = Some(
                rest.trim()
                    .parse()
                    .map_err(|_| err("bad dimension"))?,
            );
        } else if let Some(rest) = line.strip_prefix("rel:") {
            let (t, v) = ready(&tag, &vars)?;
            ideal.push(parse_poly(rest, &v, t)?);
        } else if let Some(rest) = line.strip_prefix("branch:") {
            let (t, v) = ready(&tag, &vars)?;
            branch = Some(parse_poly(rest, &v, t)?);
        } else if let Some(rest) = line.strip_prefix("action ") {
            let (t, v) = ready(&tag, &vars)?;
            let (aname, payload) = rest
                .split_once(':')
                .ok_or_else(|| err("action line needs 'action <name>: entries'"))?;
            let aname = aname.trim();
            actions.push((
                aname.to_string(),
                parse_action(aname, payload, v.len(), t)?,
            ));
        } else {
            return Err(err(&format!("unrecognized line '{line}'")));
        }
    }

    let tag = tag.ok_or_else(|| AlgError::Parse("missing field: line".into()))?;
    let vars = vars.ok_or_else(|| AlgError::Parse("missing vars: line".into()))?;
    let mut model = VarietyModel::new(&name, vars, ideal, tag)?;
    model.dimension = dim;
    for (aname, gen) in actions {
        model = model.with_action(aname, gen);
    }
    model.check_action_stability()?;
    Ok(LoadedModel { model, branch })
}
