//! The acceptance claims: every externally checkable statement the tool
//! reproduces, grouped into stages, with one outcome record per claim.
//! The CLI serializes these records; the acceptance test prints one line
//! per claim.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::data;
use crate::equivariant::{
    check_action_relations, lefschetz_admissible_a, symbol_actions, ActionGen,
};
use crate::error::AlgError;
use crate::exactalg::field::{FieldElement, FieldTag};
use crate::exactalg::parse::{parse_poly, parse_var_list};
use crate::exactalg::poly::MultiPoly;
use crate::fpgroup::quotient::{closure, is_abelian, is_normal, Perm};
use crate::fpgroup::{
    enumerate_cosets, parse_presentation_file, subgroup_abelian_invariants, CosetTable,
    EnumeratorOptions, FiniteQuotient, PresentationFile,
};
use crate::pipeline::cover::{build_double_cover, cover_relations, find_weighted_sections};
use crate::pipeline::divisor::{find_section_with_divisor, CurveCondition, DivisorConstraint};
use crate::pipeline::interpolate::interpolate_vanishing_forms;
use crate::pipeline::loader::load_model;
use crate::pipeline::model::{in_linear_span, VarietyModel};
use crate::pipeline::multable::{fix_scalings_by_associativity, synthetic_mu7_table, MulTable};
use crate::pipeline::sample::{sample_points, PointSample, SampleStrategy};
use crate::util::XorShift64;
use crate::verify::{
    diagonalize_c3, groebner_basis, hilbert_polynomial, smoothness_check_mod_p,
    total_monomial_count, MonomialOrder, SmoothnessOptions,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClaimStatus {
    Pass,
    Fail,
    Skipped(String),
}

#[derive(Clone, Debug)]
pub struct ClaimOutcome {
    pub id: &'static str,
    pub location: &'static str,
    pub expected: String,
    pub computed: String,
    pub status: ClaimStatus,
    pub runtime_ms: u128,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stage {
    Group,
    Rep,
    Pipeline,
    Verify,
}

/// Optional external inputs (file contents, not paths).
#[derive(Clone, Debug, Default)]
pub struct DataInputs {
    pub y_equations: Option<String>,
    pub x_equations: Option<String>,
}

fn claim(
    id: &'static str,
    location: &'static str,
    expected: &str,
    body: impl FnOnce() -> Result<(String, bool), AlgError>,
) -> ClaimOutcome {
    let start = Instant::now();
    let (computed, status) = match body() {
        Ok((computed, true)) => (computed, ClaimStatus::Pass),
        Ok((computed, false)) => (computed, ClaimStatus::Fail),
        Err(e) => (format!("error: {e:?}"), ClaimStatus::Fail),
    };
    ClaimOutcome {
        id,
        location,
        expected: expected.to_string(),
        computed,
        status,
        runtime_ms: start.elapsed().as_millis(),
    }
}

fn skipped(id: &'static str, location: &'static str, expected: &str, reason: &str) -> ClaimOutcome {
    ClaimOutcome {
        id,
        location,
        expected: expected.to_string(),
        computed: String::new(),
        status: ClaimStatus::Skipped(reason.to_string()),
        runtime_ms: 0,
    }
}

fn ambient() -> Result<PresentationFile, AlgError> {
    parse_presentation_file(data::AMBIENT_PRESENTATION)
}

fn table_of(file: &PresentationFile, sub: &str) -> Result<CosetTable, AlgError> {
    enumerate_cosets(
        &file.presentation,
        &file.subgroups[sub],
        &EnumeratorOptions::default(),
    )
}

pub fn run_stage(stage: Stage, inputs: &DataInputs) -> Vec<ClaimOutcome> {
    match stage {
        Stage::Group => group_claims(),
        Stage::Rep => rep_claims(),
        Stage::Pipeline => pipeline_claims(inputs),
        Stage::Verify => verify_claims(inputs),
    }
}

pub fn all_claims(inputs: &DataInputs) -> Vec<ClaimOutcome> {
    [Stage::Group, Stage::Rep, Stage::Pipeline, Stage::Verify]
        .into_iter()
        .flat_map(|s| run_stage(s, inputs))
        .collect()
}

// ---------------------------------------------------------------- group

fn group_claims() -> Vec<ClaimOutcome> {
    vec![
        claim("G1", "§2", "index 21 for both subgroups", || {
            let file = ambient()?;
            let ix = table_of(&file, "gx")?.index();
            let iy = table_of(&file, "gy")?.index();
            Ok((format!("gx index {ix}, gy index {iy}"), ix == 21 && iy == 21))
        }),
        claim(
            "G2",
            "§2, Prop 2.1",
            "index 294, normal, quotient presented as (D14 x C7) : C3",
            || {
                let file = ambient()?;
                let table = table_of(&file, "gz")?;
                let index = table.index();
                let quotient = FiniteQuotient::from_coset_table(&table)?;
                let order = quotient.order(1000)?;
                // quotient order equal to the index means the coset
                // action is regular, i.e. the subgroup is normal
                let normal = order == index as u64;
                let target = parse_presentation_file(data::QUOTIENT_294_PRESENTATION)?
                    .presentation;
                let images = t_images(&file, &quotient)?;
                let presented = crate::fpgroup::quotient::verify_quotient_presentation(
                    &quotient, &target, &images, 294, 1000,
                )?;
                Ok((
                    format!("index {index}, order {order}, relations verified: {presented}"),
                    index == 294 && normal && presented,
                ))
            },
        ),
        claim(
            "G3",
            "Prop 2.2",
            "<t1,t3> of order 14 abelian; <t1,t2> of order 14 nonabelian",
            || {
                let file = ambient()?;
                let quotient = FiniteQuotient::from_coset_table(&table_of(&file, "gz")?)?;
                let images = t_images(&file, &quotient)?;
                let t13 = vec![images[0].clone(), images[2].clone()];
                let t12 = vec![images[0].clone(), images[1].clone()];
                let o13 = closure(&t13, quotient.degree, 1000)?.len();
                let o12 = closure(&t12, quotient.degree, 1000)?.len();
                let ab13 = is_abelian(&t13);
                let ab12 = is_abelian(&t12);
                Ok((
                    format!(
                        "<t1,t3>: order {o13}, abelian {ab13}; <t1,t2>: order {o12}, abelian {ab12}"
                    ),
                    o13 == 14 && ab13 && o12 == 14 && !ab12,
                ))
            },
        ),
        claim(
            "G4",
            "§2",
            "the subgroup generated by gz and t2 has index 2 in gy and is normal in the ambient group",
            || {
                let file = ambient()?;
                let quotient = FiniteQuotient::from_coset_table(&table_of(&file, "gz")?)?;
                let images = t_images(&file, &quotient)?;
                let t2 = images[1].clone();
                // image of gy in the order-294 quotient
                let gy_images: Vec<_> = data::GY_GENERATOR_WORDS
                    .iter()
                    .map(|w| {
                        quotient.word_permutation(&file.presentation.parse_word(w)?)
                    })
                    .collect::<Result<_, _>>()?;
                let image_y = closure(&gy_images, quotient.degree, 1000)?;
                let w_image = closure(&[t2.clone()], quotient.degree, 1000)?;
                let contains = image_y.contains(&t2);
                let index_in_y = image_y.len() / w_image.len();
                let normal =
                    is_normal(&quotient.gen_images, &[t2], quotient.degree, 1000)?;
                Ok((
                    format!(
                        "gy image order {}, gw image order {}, contained {contains}, index {index_in_y}, normal {normal}",
                        image_y.len(),
                        w_image.len()
                    ),
                    contains && index_in_y == 2 && normal,
                ))
            },
        ),
        claim(
            "G5",
            "Prop 2.5",
            "gx abelianizes to Z/14; gz abelianization is finite",
            || {
                let file = ambient()?;
                let gx = subgroup_abelian_invariants(&file.presentation, &table_of(&file, "gx")?)?;
                let gz = subgroup_abelian_invariants(&file.presentation, &table_of(&file, "gz")?)?;
                Ok((
                    format!(
                        "gx: rank {} torsion {:?}; gz: rank {} torsion {:?}",
                        gx.free_rank, gx.torsion, gz.free_rank, gz.torsion
                    ),
                    gx.free_rank == 0
                        && gx.torsion == vec![BigInt::from(14)]
                        && gz.free_rank == 0,
                ))
            },
        ),
    ]
}

fn t_images(
    file: &PresentationFile,
    quotient: &FiniteQuotient,
) -> Result<Vec<Perm>, AlgError> {
    data::T_WORDS
        .iter()
        .map(|w| quotient.word_permutation(&file.presentation.parse_word(w)?))
        .collect()
}

// ------------------------------------------------------------------ rep

fn rep_claims() -> Vec<ClaimOutcome> {
    vec![
        claim("G6", "Prop 2.6", "admissible a = {3, 5, 6}", || {
            let got = lefschetz_admissible_a();
            Ok((format!("{got:?}"), got == vec![3, 5, 6]))
        }),
        claim(
            "G7",
            "Cor 2.8 / Prop 2.1",
            "the 13-symbol action matrices satisfy every quotient relation, for each admissible a",
            || {
                let pres = parse_presentation_file(data::QUOTIENT_294_PRESENTATION)?
                    .presentation;
                let mut failures = Vec::new();
                for a in [3u8, 5, 6] {
                    let actions = symbol_actions(a, FieldTag::Cyclotomic)?;
                    if let Some(r) = check_action_relations(&pres, &actions)? {
                        failures.push(format!("a={a}: {r}"));
                    }
                }
                let ok = failures.is_empty();
                let computed = if ok {
                    "all relations hold for a in {3, 5, 6}".to_string()
                } else {
                    failures.join("; ")
                };
                Ok((computed, ok))
            },
        ),
    ]
}

// ------------------------------------------------------------- pipeline

fn span_equal(a: &[MultiPoly], b: &[MultiPoly]) -> Result<bool, AlgError> {
    if a.len() != b.len() {
        return Ok(false);
    }
    for f in a {
        if !in_linear_span(f, b)? {
            return Ok(false);
        }
    }
    for f in b {
        if !in_linear_span(f, a)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn twisted_cubic_model(tag: FieldTag) -> Result<(VarietyModel, Vec<MultiPoly>), AlgError> {
    let vars = parse_var_list("x y z u")?;
    let quadrics: Vec<MultiPoly> = ["x*z - y^2", "x*u - y*z", "y*u - z^2"]
        .iter()
        .map(|t| parse_poly(t, &vars, tag))
        .collect::<Result<_, _>>()?;
    let mut m = VarietyModel::new("twisted_cubic", vars, quadrics.clone(), tag)?;
    m.dimension = Some(1);
    Ok((m, quadrics))
}

fn pipeline_claims(inputs: &DataInputs) -> Vec<ClaimOutcome> {
    let mut claims = vec![
        claim(
            "P1",
            "§3",
            "interpolation recovers 3 twisted-cubic quadrics and 6 Veronese quadrics over GF(43)",
            || {
                let tag = FieldTag::Prime(43);
                let (m, expected) = twisted_cubic_model(tag)?;
                let mut sample = sample_points(&m, 20, SampleStrategy::Slicing, 17)?;
                let check = sample.split_off(5);
                let forms =
                    interpolate_vanishing_forms(&sample, &check, 2, &m.coordinates, None)?;
                let cubic_ok = forms.len() == 3 && span_equal(&forms, &expected)?;

                let (train, check, vars, oracle) = veronese_fixture(tag)?;
                let vforms = interpolate_vanishing_forms(&train, &check, 2, &vars, None)?;
                let veronese_ok = vforms.len() == 6 && span_equal(&vforms, &oracle)?;
                Ok((
                    format!(
                        "twisted cubic: {} quadrics (span match {cubic_ok}); Veronese: {} quadrics (span match {veronese_ok})",
                        forms.len(),
                        vforms.len()
                    ),
                    cubic_ok && veronese_ok,
                ))
            },
        ),
        claim(
            "P2",
            "§3",
            "divisor-constrained sections unique up to scalar on both fixtures",
            || {
                let tag = FieldTag::Prime(43);
                let vars = parse_var_list("x y z")?;
                let plane = {
                    let mut m = VarietyModel::new("P2", vars.clone(), vec![], tag)?;
                    m.dimension = Some(2);
                    m
                };
                let pt = |coords: &[i64]| -> Vec<FieldElement> {
                    coords
                        .iter()
                        .map(|&c| FieldElement::from_integer(c, tag))
                        .collect()
                };
                let provided = |points: Vec<Vec<FieldElement>>, m: u32| CurveCondition {
                    points: PointSample {
                        tag,
                        points,
                        seed: 0,
                        strategy: "provided".into(),
                    },
                    multiplicity: m,
                };
                let line = find_section_with_divisor(
                    &plane,
                    1,
                    &DivisorConstraint {
                        conditions: vec![provided(vec![pt(&[1, 0, 0]), pt(&[0, 1, 0])], 1)],
                    },
                    None,
                )?;
                let line_ok = line == parse_poly("z", &vars, tag)?;

                let conic = parse_poly("x^2 + y*z", &vars, tag)?;
                let mut conic_model =
                    VarietyModel::new("conic", vars.clone(), vec![conic], tag)?;
                conic_model.dimension = Some(1);
                let tangent = find_section_with_divisor(
                    &conic_model,
                    1,
                    &DivisorConstraint {
                        conditions: vec![provided(vec![pt(&[0, 1, 0])], 2)],
                    },
                    None,
                )?;
                let tangent_ok = tangent == parse_poly("z", &vars, tag)?;
                Ok((
                    format!("line through 2 points: {line}; double contact tangent: {tangent}"),
                    line_ok && tangent_ok,
                ))
            },
        ),
        claim(
            "P4",
            "§3",
            "associativity fixing succeeds and is gauge invariant on the synthetic degree-7 fixture",
            || {
                let truth = synthetic_mu7_table(43)?;
                let baseline = fix_scalings_by_associativity(&truth)?;
                let mut rng = XorShift64::new(7);
                let mut identical = true;
                for _ in 0..3 {
                    let corrupted = gauge_rescale(&truth, &mut rng)?;
                    let fixed = fix_scalings_by_associativity(&corrupted)?;
                    identical &= tables_equal(&fixed, &baseline)?;
                }
                Ok((
                    format!("fixing succeeded; 3 gauge-rescaled reruns identical: {identical}"),
                    identical,
                ))
            },
        ),
        claim(
            "P6",
            "§3-§4",
            "every emitted fixture relation is an exact eigenvector of all declared actions (>= 100 relations)",
            || {
                let tag = FieldTag::Prime(43);
                let zeta7 = FieldElement::zeta7(tag)?;
                let truth = synthetic_mu7_table(43)?;
                let mut rng = XorShift64::new(2024);
                let mut total = 0usize;
                let mut pure = 0usize;
                for _ in 0..5 {
                    let fixed =
                        fix_scalings_by_associativity(&gauge_rescale(&truth, &mut rng)?)?;
                    let relations = cover_relations(&fixed)?;
                    let mut scalars = vec![FieldElement::one(tag); 2];
                    for k in 0..7 {
                        scalars.push(zeta7.pow(k)?);
                    }
                    let mu7 = ActionGen::from_scalars("mu7", scalars)?;
                    let mut base = vec![FieldElement::zeta3(tag)?, FieldElement::one(tag)];
                    base.extend(std::iter::repeat(FieldElement::one(tag)).take(7));
                    let sigma0 = ActionGen::from_scalars("sigma0", base)?;
                    for f in &relations {
                        total += 1;
                        if is_eigenvector(&mu7, f)? && is_eigenvector(&sigma0, f)? {
                            pure += 1;
                        }
                    }
                }
                Ok((
                    format!("{pure}/{total} relations pure"),
                    total >= 100 && pure == total,
                ))
            },
        ),
    ];
    claims.push(match &inputs.y_equations {
        None => skipped(
            "D1",
            "§3 Claim, §4",
            "100 parity-pure quadrics for W; 7-dimensional invariant quadric space",
            "skipped: missing input",
        ),
        Some(text) => claim(
            "D1",
            "§3 Claim, §4",
            "100 parity-pure quadrics for W; 7-dimensional invariant quadric space",
            || {
                let loaded = load_model(text)?;
                let branch = loaded
                    .branch
                    .ok_or_else(|| AlgError::Pipeline("Y file lacks a branch form".into()))?;
                let w = build_double_cover(&loaded.model, "p0", &branch, 2, 400, 1)?;
                let invariants = find_weighted_sections(
                    &w,
                    "iota",
                    &FieldElement::one(w.tag),
                    2,
                )?;
                Ok((
                    format!(
                        "{} quadrics, invariant space dimension {}",
                        w.ideal.len(),
                        invariants.len()
                    ),
                    w.ideal.len() == 100 && invariants.len() == 7,
                ))
            },
        ),
    });
    claims
}

fn is_eigenvector(action: &ActionGen, f: &MultiPoly) -> Result<bool, AlgError> {
    let image = action.act_on_form(f)?;
    let (e0, c0) = match f.first_nonzero_coeff() {
        Some(t) => t,
        None => return Ok(true),
    };
    let s = image.coeff(e0).div(c0)?;
    Ok(image == f.scale(&s)?)
}

fn gauge_rescale(table: &MulTable, rng: &mut XorShift64) -> Result<MulTable, AlgError> {
    let mut c = vec![FieldElement::one(table.tag)];
    for _ in 1..7 {
        c.push(FieldElement::from_integer(
            1 + rng.below(42) as i64,
            table.tag,
        ));
    }
    let mut out = table.clone();
    for (&(i, j), e) in out.entries.iter_mut() {
        let s = c[i].mul(&c[j])?.div(&c[(i + j) % 7])?;
        e.num = e.num.scale(&s)?;
    }
    Ok(out)
}

fn tables_equal(a: &MulTable, b: &MulTable) -> Result<bool, AlgError> {
    for (k, e) in &a.entries {
        if e.canonical()? != b.entries[k].canonical()? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn veronese_fixture(
    tag: FieldTag,
) -> Result<(PointSample, PointSample, Vec<String>, Vec<MultiPoly>), AlgError> {
    let vars = parse_var_list("x0 x1 x2 x3 x4 x5")?;
    let mut points = Vec::new();
    for a in 0..43i64 {
        for b in 0..43i64 {
            for c in [0i64, 1] {
                if a == 0 && b == 0 && c == 0 {
                    continue;
                }
                if c == 0 && b != 1 && !(b == 0 && a == 1) {
                    continue;
                }
                let v: Vec<FieldElement> = [a * a, a * b, a * c, b * b, b * c, c * c]
                    .iter()
                    .map(|&n| FieldElement::from_integer(n, tag))
                    .collect();
                points.push(v);
            }
        }
    }
    let stride = 389;
    let reordered: Vec<Vec<FieldElement>> = (0..points.len())
        .map(|i| points[(i * stride) % points.len()].clone())
        .collect();
    let train = PointSample {
        tag,
        points: reordered[..40].to_vec(),
        seed: 0,
        strategy: "provided".into(),
    };
    let check = PointSample {
        tag,
        points: reordered[40..80].to_vec(),
        seed: 0,
        strategy: "provided".into(),
    };
    let oracle: Vec<MultiPoly> = [
        "x0*x3 - x1^2",
        "x0*x4 - x1*x2",
        "x1*x4 - x2*x3",
        "x0*x5 - x2^2",
        "x1*x5 - x2*x4",
        "x3*x5 - x4^2",
    ]
    .iter()
    .map(|t| parse_poly(t, &vars, tag))
    .collect::<Result<_, _>>()?;
    Ok((train, check, vars, oracle))
}

// --------------------------------------------------------------- verify

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn verify_claims(inputs: &DataInputs) -> Vec<ClaimOutcome> {
    let mut claims = vec![
        claim(
            "P3",
            "§4",
            "Hilbert: P2 -> (m+1)(m+2)/2, twisted cubic -> 3m+1; nodal cubic singular, conic smooth",
            || {
                let tag = FieldTag::Prime(43);
                // P^2: zero ideal in three variables
                let vars = parse_var_list("x y z")?;
                let zero = MultiPoly::zero(vars.clone(), tag);
                let gb = groebner_basis(&[zero], MonomialOrder::Degrevlex)?;
                let h = hilbert_polynomial(&gb, 2)?;
                let p2_ok = h.polynomial
                    == vec![rational(1, 1), rational(3, 2), rational(1, 2)];

                let (cubic_model, _) = twisted_cubic_model(tag)?;
                let gb = groebner_basis(&cubic_model.ideal, MonomialOrder::Degrevlex)?;
                let h = hilbert_polynomial(&gb, 2)?;
                let tc_ok = h.polynomial == vec![rational(1, 1), rational(3, 1)];

                let nodal = parse_poly("x^3 + y^3 - x*y*z", &vars, tag)?;
                let mut nodal_model = VarietyModel::new("nodal", vars.clone(), vec![nodal], tag)?;
                nodal_model.dimension = Some(1);
                let nodal_report =
                    smoothness_check_mod_p(&nodal_model, 1, SmoothnessOptions::default())?;

                let conic = parse_poly("x^2 + y*z", &vars, tag)?;
                let mut conic_model = VarietyModel::new("conic", vars, vec![conic], tag)?;
                conic_model.dimension = Some(1);
                let conic_report =
                    smoothness_check_mod_p(&conic_model, 1, SmoothnessOptions::default())?;
                Ok((
                    format!(
                        "P2 coefficients ok: {p2_ok}; twisted cubic 3m+1: {tc_ok}; nodal smooth: {}; conic smooth: {}",
                        nodal_report.smooth, conic_report.smooth
                    ),
                    p2_ok && tc_ok && !nodal_report.smooth && conic_report.smooth,
                ))
            },
        ),
        claim(
            "P5",
            "§4",
            "C3 diagonalization on the 3-variable permutation fixture yields the Fourier eigenbasis with a stable ideal",
            || {
                let tag = FieldTag::Prime(43);
                let vars = parse_var_list("x y z")?;
                let sym = parse_poly("x*y + y*z + z*x", &vars, tag)?;
                let mut m = VarietyModel::new("c3fix", vars, vec![sym], tag)?;
                m.dimension = Some(1);
                let g3 = ActionGen::from_permutation("g3", &[1, 2, 0], tag)?;
                m = m.with_action("g3", g3.clone());
                m.check_action_stability()?;
                let d = diagonalize_c3(&m, &g3)?;
                d.check_action_stability()?;
                // the new action must be diagonal with eigenvalues 1, z3, z3^2
                let diag = d
                    .action("g3")
                    .ok_or_else(|| AlgError::Pipeline("missing diagonal action".into()))?;
                let mut eigenvalues: Vec<FieldElement> = (0..3)
                    .map(|i| {
                        let (j, c) = diag.image(i);
                        if *j == i {
                            Ok(c.clone())
                        } else {
                            Err(AlgError::Pipeline("action not diagonal".into()))
                        }
                    })
                    .collect::<Result<_, _>>()?;
                eigenvalues.sort_by_key(|c| format!("{c:?}"));
                let mut expected: Vec<FieldElement> = (0..3)
                    .map(|k| FieldElement::zeta3(tag)?.pow(k))
                    .collect::<Result<_, _>>()?;
                expected.sort_by_key(|c| format!("{c:?}"));
                let eig_ok = eigenvalues == expected;
                Ok((
                    format!(
                        "diagonal action with the three cube-root eigenvalues: {eig_ok}; ideal stable after substitution"
                    ),
                    eig_ok,
                ))
            },
        ),
    ];
    claims.push(match &inputs.x_equations {
        None => skipped(
            "D2",
            "§4",
            "84 cubics in 10 variables; Hilbert polynomial 18m^2 - 9m + 1 over GF(37); dimension 2, degree 36",
            "skipped: missing input",
        ),
        Some(text) => claim(
            "D2",
            "§4",
            "84 cubics in 10 variables; Hilbert polynomial 18m^2 - 9m + 1 over GF(37); dimension 2, degree 36",
            || {
                let model = expect_x_model(text)?;
                let shape_ok = model.ideal.len() == 84
                    && model.coordinates.len() == 10
                    && model.ideal.iter().all(|f| f.total_degree() == Some(3));
                let gb = groebner_basis(&model.ideal, MonomialOrder::Degrevlex)?;
                let h = hilbert_polynomial(&gb, 2)?;
                let hp_ok = h.polynomial
                    == vec![rational(1, 1), rational(-9, 1), rational(18, 1)];
                Ok((
                    format!(
                        "{} generators in {} variables; HP {:?}, dimension {}, degree {}",
                        model.ideal.len(),
                        model.coordinates.len(),
                        h.polynomial,
                        h.dimension,
                        h.degree
                    ),
                    shape_ok && hp_ok && h.dimension == 2 && h.degree == BigInt::from(36),
                ))
            },
        ),
    });
    claims.push(match &inputs.x_equations {
        None => skipped(
            "D3",
            "§4",
            "smooth mod 37 after C3 diagonalization; monomial count within [25%, 45%] of the original",
            "skipped: missing input",
        ),
        Some(text) => claim(
            "D3",
            "§4",
            "smooth mod 37 after C3 diagonalization; monomial count within [25%, 45%] of the original",
            || {
                let model = expect_x_model(text)?;
                let g3 = model
                    .action("g3")
                    .ok_or_else(|| AlgError::Pipeline("X file lacks the g3 action".into()))?
                    .clone();
                let before = total_monomial_count(&model);
                let diag = diagonalize_c3(&model, &g3)?;
                let after = total_monomial_count(&diag);
                let lo = before * 25;
                let hi = before * 45;
                let ratio_ok = after * 100 >= lo && after * 100 <= hi;
                let report = smoothness_check_mod_p(&diag, 2, SmoothnessOptions::default())?;
                Ok((
                    format!(
                        "monomials {before} -> {after}; smooth: {}, probabilistic: {}",
                        report.smooth, report.probabilistic
                    ),
                    ratio_ok && report.smooth,
                ))
            },
        ),
    });
    claims
}

fn expect_x_model(text: &str) -> Result<VarietyModel, AlgError> {
    let loaded = load_model(text)?;
    if loaded.model.tag != FieldTag::Prime(37) {
        return Err(AlgError::TagMismatch {
            left: loaded.model.tag,
            right: FieldTag::Prime(37),
        });
    }
    Ok(loaded.model)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unconditional_claims_all_pass() {
        let inputs = DataInputs::default();
        for outcome in all_claims(&inputs) {
            match outcome.status {
                ClaimStatus::Pass => {}
                ClaimStatus::Skipped(ref reason) => {
                    assert!(outcome.id.starts_with('D'), "{} skipped", outcome.id);
                    assert!(reason.contains("missing input"));
                }
                ClaimStatus::Fail => panic!(
                    "claim {} failed: expected {}, computed {}",
                    outcome.id, outcome.expected, outcome.computed
                ),
            }
        }
    }

    #[test]
    fn data_claims_fail_loudly_on_malformed_input() {
        let inputs = DataInputs {
            y_equations: Some("field: GF(43)\nvars: x y\n".into()),
            x_equations: Some("not a model".into()),
        };
        let outcomes = all_claims(&inputs);
        for id in ["D1", "D2", "D3"] {
            let o = outcomes.iter().find(|o| o.id == id).unwrap();
            assert_eq!(o.status, ClaimStatus::Fail, "{id} should fail");
        }
    }
}
