//! One function per subcommand; each returns the report and its exit status.

use anyhow::{anyhow, bail, Result};
use bialgebra::cohomology::{
    centralizer_member, centralizer_pattern_sl, classify_o_even_example, classify_o_odd, d_example_triple,
    is_bd_cocycle, normalize_o_even, normalize_sl, CocycleClass,
};
use bialgebra::json::{
    cocycle_report_to_json, ext_matrix_from_json, ext_tensor_from_json, ext_tensor_to_json, tensor_to_json,
    triple_from_json, triple_to_json, twisted_report_to_json, TripleSpec,
};
use bialgebra::lie::{LieModel, ModelKind, RootType, Tensor2};
use bialgebra::linalg::ExtMatrix;
use bialgebra::rmatrix::{
    build_rbd, check_r0, enumerate_triples, r0_from_skew, solve_r0, symmetry_residual, AdmissibleTriple,
};
use bialgebra::scalar::literal::{parse_ramified, parse_series};
use bialgebra::scalar::{classify_quadratic, AlgebraKind, ExtScalar, QuadraticWitness, Scalar};
use bialgebra::twisted::{
    build_twisted_r, build_x0_twisted, default_w0, lagrangian_check, base_subspace, l_subspace, twisted_normalize_sl,
    verify_twisted_cocycle, SubspaceSpec, TwistedClass,
};
use bialgebra::Error;
use serde_json::{json, Value};

use crate::io::load_json;

pub const OK: i32 = 0;
pub const NEGATIVE: i32 = 10;
pub const UNRESOLVED: i32 = 11;

pub struct Outcome {
    pub report: Value,
    pub code: i32,
}

fn outcome(report: Value, code: i32) -> Result<Outcome> {
    Ok(Outcome { report, code })
}

/// The matrix model for a root system: A_r ↦ sl(r+1), B_r ↦ o(2r+1), D_r ↦ o(2r).
pub fn model_for(root_type: RootType, rank: usize) -> Result<LieModel> {
    let (kind, n) = match root_type {
        RootType::A => (ModelKind::Sl, rank + 1),
        RootType::B => (ModelKind::O, 2 * rank + 1),
        RootType::D => (ModelKind::O, 2 * rank),
    };
    Ok(LieModel::new(kind, n)?)
}

pub fn parse_algebra(s: &str, n: usize) -> Result<LieModel> {
    let kind = ModelKind::parse(s).ok_or_else(|| anyhow!("unknown algebra `{s}` (expected sl or o)"))?;
    Ok(LieModel::new(kind, n)?)
}

fn parse_root_type(s: &str) -> Result<RootType> {
    RootType::parse(s).ok_or_else(|| anyhow!("unknown root type `{s}` (expected A, B or D)"))
}

/// `empty`, a path, or inline JSON.
fn load_triple(arg: Option<&str>, model: &LieModel) -> Result<TripleSpec> {
    match arg {
        None | Some("empty") => Ok(TripleSpec {
            triple: AdmissibleTriple::empty(model.roots.root_type, model.rank()),
            skew: None,
        }),
        Some(a) => {
            let spec = triple_from_json(&load_json(a)?)?;
            let t = &spec.triple;
            if (t.root_type, t.rank) != (model.roots.root_type, model.rank()) {
                bail!("triple is for {}{} but the algebra has root system {}", t.root_type, t.rank, model.roots.name());
            }
            if !t.is_valid() {
                bail!("triple is not admissible: {}", t.validate().join("; "));
            }
            Ok(spec)
        }
    }
}

fn r_bd(model: &LieModel, spec: &TripleSpec) -> Result<(Tensor2<bialgebra::scalar::GaussRat>, usize)> {
    let param = solve_r0(model, &spec.triple)?;
    let r0 = match &spec.skew {
        Some(s) => {
            let r0 = r0_from_skew(model, s);
            check_r0(model, &spec.triple, &r0)?;
            r0
        }
        None => param.r0.clone(),
    };
    Ok((build_rbd(model, &spec.triple, &r0)?, param.free_dim()))
}

fn load_matrix(arg: &str, prec: usize) -> Result<ExtMatrix> {
    Ok(ext_matrix_from_json(&load_json(arg)?, prec)?)
}

pub fn classify_algebra(p: &str, q: &str, prec: usize) -> Result<Outcome> {
    let c = classify_quadratic(&parse_series(p, prec)?, &parse_series(q, prec)?)?;
    let witness = match &c.witness {
        QuadraticWitness::Dual { epsilon } => json!({"epsilon": [epsilon.x.to_string(), epsilon.y.to_string()]}),
        QuadraticWitness::Split { roots } => json!({"roots": [roots[0].to_string(), roots[1].to_string()]}),
        QuadraticWitness::Ramified { j } => json!({"j": [j.x.to_string(), j.y.to_string()]}),
    };
    outcome(
        json!({
            "command": "classify-algebra",
            "precision": prec,
            "p": c.algebra.p.to_string(),
            "q": c.algebra.q.to_string(),
            "kind": c.kind.name(),
            "discriminant": c.discriminant.to_string(),
            "witness": witness,
            "witness_verified": c.verify(),
        }),
        if c.verify() { OK } else { UNRESOLVED },
    )
}

pub fn build_r(root_type: &str, rank: usize, triple: Option<&str>, prec: usize) -> Result<Outcome> {
    let model = model_for(parse_root_type(root_type)?, rank)?;
    let spec = load_triple(triple, &model)?;
    let (r, free_dim) = r_bd(&model, &spec)?;
    let cybe = model.cybe(&r);
    let sym = symmetry_residual(&model, &r, &bialgebra::scalar::GaussRat::one());
    let ok = cybe.is_empty() && sym.is_empty();
    outcome(
        json!({
            "command": "build-r",
            "precision": prec,
            "algebra": model.kind.to_string(),
            "n": model.n,
            "triple": triple_to_json(&spec.triple),
            "continuous_parameter_dim": free_dim,
            "r": tensor_to_json(&r),
            "certificate": {
                "cybe": if cybe.is_empty() { json!("0") } else { json!(cybe.to_string()) },
                "symmetry": if sym.is_empty() { json!("Omega") } else { tensor_to_json(&sym) },
            },
        }),
        if ok { OK } else { NEGATIVE },
    )
}

pub fn verify_r(algebra: &str, n: usize, r_arg: &str, c: &str, prec: usize) -> Result<Outcome> {
    let model = parse_algebra(algebra, n)?;
    let r = ext_tensor_from_json(&load_json(r_arg)?, prec)?;
    if r.iter().any(|(a, b, _)| a >= model.dim() || b >= model.dim()) {
        bail!("tensor index out of range for dimension {}", model.dim());
    }
    let kind = r.proto().map_or(AlgebraKind::Ramified, |x| x.kind);
    let c = parse_ramified(c, prec)?;
    let c = if kind == AlgebraKind::Ramified { c } else { ExtScalar::new(kind, c.a.clone(), c.b.clone()) };
    let cybe = model.cybe(&r);
    let sym = symmetry_residual(&model, &r, &c);
    let ok = cybe.is_empty() && sym.is_empty();
    outcome(
        json!({
            "command": "verify-r",
            "precision": prec,
            "algebra": model.kind.to_string(),
            "n": n,
            "cybe_residual": cybe.iter().map(|(i, j, k, v)| json!([i, j, k, v.to_string()])).collect::<Vec<_>>(),
            "symmetry_residual": ext_tensor_to_json(&sym),
            "c": c.to_string(),
            "valid": ok,
        }),
        if ok { OK } else { NEGATIVE },
    )
}

pub fn enumerate(root_type: &str, rank: usize, prec: usize) -> Result<Outcome> {
    let rs = bialgebra::lie::RootSystem::new(parse_root_type(root_type)?, rank)?;
    let triples = enumerate_triples(&rs)?;
    outcome(
        json!({
            "command": "enumerate-triples",
            "precision": prec,
            "root_system": rs.name(),
            "count": triples.len(),
            "triples": triples.iter().map(triple_to_json).collect::<Vec<_>>(),
        }),
        OK,
    )
}

pub fn centralizer(algebra: &str, n: usize, triple: Option<&str>, matrix: &str, prec: usize) -> Result<Outcome> {
    let model = parse_algebra(algebra, n)?;
    let spec = load_triple(triple, &model)?;
    let (r, _) = r_bd(&model, &spec)?;
    let x = load_matrix(matrix, prec)?;
    let one = ExtScalar::one(AlgebraKind::Ramified, prec);
    let rext = r.map(|v| one.embed(v));
    let image = model.adjoint_act(&x, &rext)?;
    let member = centralizer_member(&model, &x, &rext)?;
    let pattern = (model.kind == ModelKind::Sl).then(|| match centralizer_pattern_sl(n, &spec.triple) {
        bialgebra::cohomology::CentralizerPattern::Sl { classes, .. } => json!(classes
            .iter()
            .map(|c| c.iter().map(|i| format!("s{}", i + 1)).collect::<Vec<_>>())
            .collect::<Vec<_>>()),
        _ => Value::Null,
    });
    outcome(
        json!({
            "command": "centralizer",
            "precision": prec,
            "triple": triple_to_json(&spec.triple),
            "member": member,
            "residual": ext_tensor_to_json(&image.sub(&rext)),
            "diagonal_pattern": pattern,
        }),
        if member { OK } else { NEGATIVE },
    )
}

pub fn classify_cocycle(algebra: &str, n: usize, triple: Option<&str>, matrix: &str, prec: usize) -> Result<Outcome> {
    let model = parse_algebra(algebra, n)?;
    let spec = load_triple(triple, &model)?;
    let x = load_matrix(matrix, prec)?;
    if x.rows() != n || x.cols() != n {
        bail!("matrix must be {n}×{n}");
    }
    let t = &spec.triple;
    let result = match model.kind {
        ModelKind::Sl => normalize_sl(&model, &x, t),
        ModelKind::O if t.is_empty() && n % 2 == 0 => normalize_o_even(&model, &x),
        ModelKind::O if t.is_empty() => classify_o_odd(&model, &x),
        ModelKind::O if model.roots.root_type == RootType::D && *t == d_example_triple(model.rank()) => {
            classify_o_even_example(&model, &x)
        }
        ModelKind::O => bail!("orthogonal classification covers the empty triple and the D-type a(r-1) -> a(r) triple"),
    };
    let report = match result {
        Ok(r) => r,
        Err(Error::NotCocycle) => {
            let (r, _) = r_bd(&model, &spec)?;
            is_bd_cocycle(&model, &x, &r)?
        }
        Err(e) => return Err(e.into()),
    };
    let code = match (report.is_cocycle, report.class) {
        (false, _) => NEGATIVE,
        (true, Some(CocycleClass::Trivial | CocycleClass::Nontrivial)) => OK,
        _ => UNRESOLVED,
    };
    let mut v = cocycle_report_to_json(&report, &x);
    let obj = v.as_object_mut().expect("report is an object");
    obj.insert("command".into(), json!("classify-cocycle"));
    obj.insert("precision".into(), json!(prec));
    obj.insert("triple".into(), triple_to_json(t));
    outcome(v, code)
}

/// `x0` selects the canonical matrix X₀(n).
pub fn classify_twisted(n: usize, matrix: &str, prec: usize) -> Result<Outcome> {
    let model = LieModel::new(ModelKind::Sl, n)?;
    let x = if matrix == "x0" { build_x0_twisted(n, prec) } else { load_matrix(matrix, prec)? };
    if x.rows() != n || x.cols() != n {
        bail!("matrix must be {n}×{n}");
    }
    let triple = AdmissibleTriple::empty(RootType::A, model.rank());
    let r = build_rbd(&model, &triple, &solve_r0(&model, &triple)?.r0)?;
    if !verify_twisted_cocycle(&model, &x, &r)? {
        let residual = bialgebra::twisted::twisted_residual(&model, &x, &r)?;
        return outcome(
            json!({
                "command": "classify-twisted",
                "precision": prec,
                "is_twisted_cocycle": false,
                "residual": ext_tensor_to_json(&residual),
            }),
            NEGATIVE,
        );
    }
    let report = twisted_normalize_sl(&model, &x)?;
    let twisted_r = build_twisted_r(&model, &x, &r)?;
    let mut v = twisted_report_to_json(&report, &x);
    let obj = v.as_object_mut().expect("report is an object");
    obj.insert("command".into(), json!("classify-twisted"));
    obj.insert("precision".into(), json!(prec));
    obj.insert("r".into(), ext_tensor_to_json(&twisted_r));
    obj.insert("basis".into(), json!((0..model.dim()).map(|i| model.basis_name(i)).collect::<Vec<_>>()));
    let code = if report.class == TwistedClass::OneClass { OK } else { UNRESOLVED };
    outcome(v, code)
}

fn load_subspace(arg: &str, label: &str, prec: usize) -> Result<SubspaceSpec> {
    let v = load_json(arg)?;
    let gens = v.as_array().ok_or_else(|| anyhow!("{label} must be a list of matrices"))?;
    let generators = gens.iter().map(|g| ext_matrix_from_json(g, prec)).collect::<bialgebra::Result<Vec<_>>>()?;
    Ok(SubspaceSpec { label: label.into(), generators })
}

pub fn check_lagrangian(n: usize, w: &str, kind: &str, l: Option<&str>, prec: usize) -> Result<Outcome> {
    let model = LieModel::new(ModelKind::Sl, n)?;
    let kind = AlgebraKind::from_name(kind).ok_or_else(|| anyhow!("unknown algebra kind `{kind}`"))?;
    let w = if w == "w0" { default_w0(n, prec) } else { load_subspace(w, "W", prec)? };
    let l_ref = match l {
        Some(path) => load_subspace(path, "L", prec)?,
        None if kind == AlgebraKind::Ramified => l_subspace(&model, prec),
        None => base_subspace(&model, kind, prec),
    };
    let c = lagrangian_check(&model, &w, kind, &l_ref)?;
    outcome(
        json!({
            "command": "check-lagrangian",
            "precision": prec,
            "n": n,
            "kind": kind.name(),
            "w_dim": w.generators.len(),
            "l_dim": l_ref.generators.len(),
            "isotropic": c.isotropic,
            "subalgebra": c.subalgebra,
            "transversal": c.transversal,
            "lagrangian": c.lagrangian,
        }),
        if c.all() { OK } else { NEGATIVE },
    )
}
