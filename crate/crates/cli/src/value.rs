//! Runtime values of the expression evaluator: scalars, basis elements and
//! tensors, dispatched over every registered basis.

use std::collections::BTreeSet;

use parkhopf::coeffs::{GradedKey, LinComb, Rational, Tensor};
use parkhopf::cqsym::{self, MmKey, Ndpf, PcatKey, RcatKey};
use parkhopf::ncsf::{self, MqKey, RKey, SKey};
use parkhopf::pqsym::{self, FKey, FqKey, GKey};
use parkhopf::scqsym::{self, FscKey, PscKey, QscKey, RscKey, SegmentedComposition};
use parkhopf::sqsym::{self, PsKey, QsKey, RsKey, SegmentedWord};
use parkhopf::words::{Composition, ParkingFunction, Word};

use crate::expr::{Atom, Expr};

pub struct EvalError(pub String);

impl From<String> for EvalError {
    fn from(s: String) -> Self {
        EvalError(s)
    }
}

#[derive(Clone)]
pub enum AnyElem {
    F(LinComb<FKey>),
    G(LinComb<GKey>),
    Ps(LinComb<PsKey>),
    Qs(LinComb<QsKey>),
    Rs(LinComb<RsKey>),
    Pcat(LinComb<PcatKey>),
    Mm(LinComb<MmKey>),
    Rcat(LinComb<RcatKey>),
    Psc(LinComb<PscKey>),
    Qsc(LinComb<QscKey>),
    Fsc(LinComb<FscKey>),
    Rsc(LinComb<RscKey>),
    S(LinComb<SKey>),
    R(LinComb<RKey>),
    Fq(LinComb<FqKey>),
    Mq(LinComb<MqKey>),
}

#[derive(Clone)]
pub enum AnyTensor {
    F(Tensor<FKey>),
    G(Tensor<GKey>),
    Ps(Tensor<PsKey>),
    Qs(Tensor<QsKey>),
    Pcat(Tensor<PcatKey>),
    Mm(Tensor<MmKey>),
    Psc(Tensor<PscKey>),
    Qsc(Tensor<QscKey>),
    Fsc(Tensor<FscKey>),
}

#[derive(Clone)]
pub enum Value {
    Scalar(Rational),
    Elem(AnyElem),
    Tensor(AnyTensor),
}

macro_rules! on_elem {
    ($value:expr, $x:ident => $body:expr) => {
        match $value {
            AnyElem::F($x) => AnyElem::F($body),
            AnyElem::G($x) => AnyElem::G($body),
            AnyElem::Ps($x) => AnyElem::Ps($body),
            AnyElem::Qs($x) => AnyElem::Qs($body),
            AnyElem::Rs($x) => AnyElem::Rs($body),
            AnyElem::Pcat($x) => AnyElem::Pcat($body),
            AnyElem::Mm($x) => AnyElem::Mm($body),
            AnyElem::Rcat($x) => AnyElem::Rcat($body),
            AnyElem::Psc($x) => AnyElem::Psc($body),
            AnyElem::Qsc($x) => AnyElem::Qsc($body),
            AnyElem::Fsc($x) => AnyElem::Fsc($body),
            AnyElem::Rsc($x) => AnyElem::Rsc($body),
            AnyElem::S($x) => AnyElem::S($body),
            AnyElem::R($x) => AnyElem::R($body),
            AnyElem::Fq($x) => AnyElem::Fq($body),
            AnyElem::Mq($x) => AnyElem::Mq($body),
        }
    };
}

macro_rules! elem_query {
    ($value:expr, $x:ident => $body:expr) => {
        match $value {
            AnyElem::F($x) => $body,
            AnyElem::G($x) => $body,
            AnyElem::Ps($x) => $body,
            AnyElem::Qs($x) => $body,
            AnyElem::Rs($x) => $body,
            AnyElem::Pcat($x) => $body,
            AnyElem::Mm($x) => $body,
            AnyElem::Rcat($x) => $body,
            AnyElem::Psc($x) => $body,
            AnyElem::Qsc($x) => $body,
            AnyElem::Fsc($x) => $body,
            AnyElem::Rsc($x) => $body,
            AnyElem::S($x) => $body,
            AnyElem::R($x) => $body,
            AnyElem::Fq($x) => $body,
            AnyElem::Mq($x) => $body,
        }
    };
}

fn max_degree<K: GradedKey>(x: &LinComb<K>) -> usize {
    x.keys().map(GradedKey::degree).max().unwrap_or(0)
}

impl AnyElem {
    pub fn basis_name(&self) -> &'static str {
        match self {
            AnyElem::F(_) => "F",
            AnyElem::G(_) => "G",
            AnyElem::Ps(_) => "PS",
            AnyElem::Qs(_) => "QS",
            AnyElem::Rs(_) => "RS",
            AnyElem::Pcat(_) => "PCat",
            AnyElem::Mm(_) => "MM",
            AnyElem::Rcat(_) => "RCat",
            AnyElem::Psc(_) => "PSC",
            AnyElem::Qsc(_) => "QSC",
            AnyElem::Fsc(_) => "FSC",
            AnyElem::Rsc(_) => "RSC",
            AnyElem::S(_) => "S",
            AnyElem::R(_) => "R",
            AnyElem::Fq(_) => "Fq",
            AnyElem::Mq(_) => "M",
        }
    }

    pub fn max_degree(&self) -> usize {
        elem_query!(self, x => max_degree(x))
    }

    pub fn scale(&self, c: &Rational) -> AnyElem {
        on_elem!(self, x => x.scale(c))
    }

    pub fn render_text(&self) -> String {
        elem_query!(self, x => format!("{x}"))
    }

    pub fn json_terms(&self) -> Vec<serde_json::Value> {
        macro_rules! terms {
            ($x:expr, $name:expr) => {
                $x.iter()
                    .map(|(k, c)| {
                        let (index, bars) = k.index_parts();
                        serde_json::json!({
                            "basis": $name,
                            "index": index,
                            "bars": bars,
                            "coeff": format!("{c}"),
                        })
                    })
                    .collect()
            };
        }
        match self {
            AnyElem::F(x) => terms!(x, "F"),
            AnyElem::G(x) => terms!(x, "G"),
            AnyElem::Ps(x) => terms!(x, "PS"),
            AnyElem::Qs(x) => terms!(x, "QS"),
            AnyElem::Rs(x) => terms!(x, "RS"),
            AnyElem::Pcat(x) => terms!(x, "PCat"),
            AnyElem::Mm(x) => terms!(x, "MM"),
            AnyElem::Rcat(x) => terms!(x, "RCat"),
            AnyElem::Psc(x) => terms!(x, "PSC"),
            AnyElem::Qsc(x) => terms!(x, "QSC"),
            AnyElem::Fsc(x) => terms!(x, "FSC"),
            AnyElem::Rsc(x) => terms!(x, "RSC"),
            AnyElem::S(x) => terms!(x, "S"),
            AnyElem::R(x) => terms!(x, "R"),
            AnyElem::Fq(x) => terms!(x, "Fq"),
            AnyElem::Mq(x) => terms!(x, "M"),
        }
    }
}

impl AnyTensor {
    pub fn render_text(&self) -> String {
        match self {
            AnyTensor::F(t) => format!("{t}"),
            AnyTensor::G(t) => format!("{t}"),
            AnyTensor::Ps(t) => format!("{t}"),
            AnyTensor::Qs(t) => format!("{t}"),
            AnyTensor::Pcat(t) => format!("{t}"),
            AnyTensor::Mm(t) => format!("{t}"),
            AnyTensor::Psc(t) => format!("{t}"),
            AnyTensor::Qsc(t) => format!("{t}"),
            AnyTensor::Fsc(t) => format!("{t}"),
        }
    }

    pub fn json_terms(&self) -> Vec<serde_json::Value> {
        macro_rules! terms {
            ($t:expr, $name:expr) => {
                $t.iter()
                    .map(|((l, r), c)| {
                        let (li, lb) = l.index_parts();
                        let (ri, rb) = r.index_parts();
                        serde_json::json!({
                            "left": {"basis": $name, "index": li, "bars": lb},
                            "right": {"basis": $name, "index": ri, "bars": rb},
                            "coeff": format!("{c}"),
                        })
                    })
                    .collect()
            };
        }
        match self {
            AnyTensor::F(t) => terms!(t, "F"),
            AnyTensor::G(t) => terms!(t, "G"),
            AnyTensor::Ps(t) => terms!(t, "PS"),
            AnyTensor::Qs(t) => terms!(t, "QS"),
            AnyTensor::Pcat(t) => terms!(t, "PCat"),
            AnyTensor::Mm(t) => terms!(t, "MM"),
            AnyTensor::Psc(t) => terms!(t, "PSC"),
            AnyTensor::Qsc(t) => terms!(t, "QSC"),
            AnyTensor::Fsc(t) => terms!(t, "FSC"),
        }
    }
}

/// Evaluation caps, configurable through `--cap` / `PARKHOPF_CAP`.
#[derive(Copy, Clone)]
pub struct Caps {
    pub outer: usize,
    pub internal: usize,
}

impl Caps {
    pub fn new(flag: Option<usize>) -> Caps {
        let env = std::env::var("PARKHOPF_CAP")
            .ok()
            .and_then(|v| v.parse::<usize>().ok());
        let base = flag.or(env);
        Caps {
            outer: base.unwrap_or(8),
            internal: base.unwrap_or(5),
        }
    }
}

fn word_atom(atom: &Atom) -> Result<ParkingFunction, EvalError> {
    if !atom.bars.is_empty() {
        return Err(EvalError(format!(
            "basis {} takes a plain word index",
            atom.basis
        )));
    }
    ParkingFunction::new(Word::new(atom.index.clone()))
        .map_err(|e| EvalError(format!("invalid index for {} at byte {}: {e}", atom.basis, atom.at)))
}

fn ndpf_atom(atom: &Atom) -> Result<Ndpf, EvalError> {
    if !atom.bars.is_empty() {
        return Err(EvalError(format!(
            "basis {} takes a sorted word index",
            atom.basis
        )));
    }
    let pf = ParkingFunction::new(Word::new(atom.index.clone()))
        .map_err(|e| EvalError(format!("invalid index for {}: {e}", atom.basis)))?;
    Ndpf::new(pf).map_err(|e| EvalError(format!("invalid index for {}: {e}", atom.basis)))
}

fn segword_atom(atom: &Atom) -> Result<SegmentedWord, EvalError> {
    let pf = ParkingFunction::new(Word::new(atom.index.clone()))
        .map_err(|e| EvalError(format!("invalid index for {}: {e}", atom.basis)))?;
    let bars: BTreeSet<usize> = atom.bars.iter().copied().collect();
    SegmentedWord::new(pf, bars)
        .map_err(|e| EvalError(format!("invalid index for {}: {e}", atom.basis)))
}

fn segcomp_atom(atom: &Atom) -> Result<SegmentedComposition, EvalError> {
    let bars: BTreeSet<usize> = atom.bars.iter().copied().collect();
    if bars.iter().any(|&b| b == 0 || b >= atom.index.len()) {
        return Err(EvalError(format!("bar out of range for {}", atom.basis)));
    }
    Ok(SegmentedComposition::new(atom.index.clone(), bars))
}

fn comp_atom(atom: &Atom) -> Result<Composition, EvalError> {
    if !atom.bars.is_empty() {
        return Err(EvalError(format!(
            "basis {} takes a composition index",
            atom.basis
        )));
    }
    Ok(Composition::new(atom.index.clone()))
}

pub fn eval(expr: &Expr, caps: Caps) -> Result<Value, EvalError> {
    match expr {
        Expr::Scalar(c) => Ok(Value::Scalar(c.clone())),
        Expr::Atom(atom) => atom_value(atom).map(Value::Elem),
        Expr::Neg(inner) => {
            let minus = -Rational::from_integer(1.into());
            match eval(inner, caps)? {
                Value::Scalar(c) => Ok(Value::Scalar(-c)),
                Value::Elem(x) => Ok(Value::Elem(x.scale(&minus))),
                Value::Tensor(_) => Err(EvalError("cannot negate a tensor".into())),
            }
        }
        Expr::Add(a, b) => combine(eval(a, caps)?, eval(b, caps)?, false),
        Expr::Sub(a, b) => combine(eval(a, caps)?, eval(b, caps)?, true),
        Expr::Mul(a, b) => multiply(eval(a, caps)?, eval(b, caps)?, caps),
        Expr::Internal(a, b) => internal(eval(a, caps)?, eval(b, caps)?, caps),
        Expr::Delta(inner) => {
            let v = eval(inner, caps)?;
            match v {
                Value::Elem(x) => Ok(Value::Tensor(coproduct(&x)?)),
                _ => Err(EvalError("Delta applies to a basis element".into())),
            }
        }
        Expr::HalfDelta(inner, left) => {
            let v = eval(inner, caps)?;
            match v {
                Value::Elem(x) => Ok(Value::Tensor(half_coproduct(&x, *left)?)),
                _ => Err(EvalError("DeltaL/DeltaR apply to a basis element".into())),
            }
        }
    }
}

fn atom_value(atom: &Atom) -> Result<AnyElem, EvalError> {
    Ok(match atom.basis.as_str() {
        "F" => AnyElem::F(LinComb::unit(FKey(word_atom(atom)?))),
        "G" => AnyElem::G(LinComb::unit(GKey(word_atom(atom)?))),
        "PS" => AnyElem::Ps(LinComb::unit(PsKey(segword_atom(atom)?))),
        "QS" => AnyElem::Qs(LinComb::unit(QsKey(segword_atom(atom)?))),
        "RS" => AnyElem::Rs(LinComb::unit(RsKey(segword_atom(atom)?))),
        "PCat" => AnyElem::Pcat(LinComb::unit(PcatKey(ndpf_atom(atom)?))),
        "MM" => AnyElem::Mm(LinComb::unit(MmKey(ndpf_atom(atom)?))),
        "RCat" => AnyElem::Rcat(LinComb::unit(RcatKey(ndpf_atom(atom)?))),
        "PSC" => AnyElem::Psc(LinComb::unit(PscKey(segcomp_atom(atom)?))),
        "QSC" => AnyElem::Qsc(LinComb::unit(QscKey(segcomp_atom(atom)?))),
        "FSC" => AnyElem::Fsc(LinComb::unit(FscKey(segcomp_atom(atom)?))),
        "RSC" => AnyElem::Rsc(LinComb::unit(RscKey(segcomp_atom(atom)?))),
        "S" => AnyElem::S(LinComb::unit(SKey(comp_atom(atom)?))),
        "R" => AnyElem::R(LinComb::unit(RKey(comp_atom(atom)?))),
        "Fq" => AnyElem::Fq(LinComb::unit(FqKey(comp_atom(atom)?))),
        "M" => AnyElem::Mq(LinComb::unit(MqKey(comp_atom(atom)?))),
        "V" => AnyElem::F(pqsym::v_basis(&comp_atom(atom)?)),
        other => {
            return Err(EvalError(format!(
                "unknown basis {other:?} (expected one of F, G, PS, QS, RS, PCat, MM, RCat, \
                 PSC, QSC, FSC, RSC, S, R, Fq, M, V)"
            )))
        }
    })
}

fn combine(a: Value, b: Value, subtract: bool) -> Result<Value, EvalError> {
    let sign = if subtract {
        -Rational::from_integer(1.into())
    } else {
        Rational::from_integer(1.into())
    };
    match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(x + y * sign)),
        (Value::Elem(x), Value::Elem(y)) => add_elems(x, y.scale(&sign)),
        _ => Err(EvalError("cannot add values of different kinds".into())),
    }
}

macro_rules! same_variant_binop {
    ($a:expr, $b:expr, $x:ident, $y:ident => $body:expr, $err:expr) => {
        match ($a, $b) {
            (AnyElem::F($x), AnyElem::F($y)) => Ok(Value::Elem(AnyElem::F($body))),
            (AnyElem::G($x), AnyElem::G($y)) => Ok(Value::Elem(AnyElem::G($body))),
            (AnyElem::Ps($x), AnyElem::Ps($y)) => Ok(Value::Elem(AnyElem::Ps($body))),
            (AnyElem::Qs($x), AnyElem::Qs($y)) => Ok(Value::Elem(AnyElem::Qs($body))),
            (AnyElem::Rs($x), AnyElem::Rs($y)) => Ok(Value::Elem(AnyElem::Rs($body))),
            (AnyElem::Pcat($x), AnyElem::Pcat($y)) => Ok(Value::Elem(AnyElem::Pcat($body))),
            (AnyElem::Mm($x), AnyElem::Mm($y)) => Ok(Value::Elem(AnyElem::Mm($body))),
            (AnyElem::Rcat($x), AnyElem::Rcat($y)) => Ok(Value::Elem(AnyElem::Rcat($body))),
            (AnyElem::Psc($x), AnyElem::Psc($y)) => Ok(Value::Elem(AnyElem::Psc($body))),
            (AnyElem::Qsc($x), AnyElem::Qsc($y)) => Ok(Value::Elem(AnyElem::Qsc($body))),
            (AnyElem::Fsc($x), AnyElem::Fsc($y)) => Ok(Value::Elem(AnyElem::Fsc($body))),
            (AnyElem::Rsc($x), AnyElem::Rsc($y)) => Ok(Value::Elem(AnyElem::Rsc($body))),
            (AnyElem::S($x), AnyElem::S($y)) => Ok(Value::Elem(AnyElem::S($body))),
            (AnyElem::R($x), AnyElem::R($y)) => Ok(Value::Elem(AnyElem::R($body))),
            (AnyElem::Fq($x), AnyElem::Fq($y)) => Ok(Value::Elem(AnyElem::Fq($body))),
            (AnyElem::Mq($x), AnyElem::Mq($y)) => Ok(Value::Elem(AnyElem::Mq($body))),
            (x, y) => Err(EvalError(format!(
                "{} ({} vs {})",
                $err,
                x.basis_name(),
                y.basis_name()
            ))),
        }
    };
}

fn add_elems(a: AnyElem, b: AnyElem) -> Result<Value, EvalError> {
    same_variant_binop!(a, b, x, y => x.add(&y), "mixed bases in a sum")
}

fn multiply(a: Value, b: Value, caps: Caps) -> Result<Value, EvalError> {
    match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(x * y)),
        (Value::Scalar(c), Value::Elem(x)) | (Value::Elem(x), Value::Scalar(c)) => {
            Ok(Value::Elem(x.scale(&c)))
        }
        (a, b) => {
            let (x, y) = match (a, b) {
                (Value::Elem(x), Value::Elem(y)) => (x, y),
                _ => return Err(EvalError("cannot multiply these values".into())),
            };
            let total = x.max_degree() + y.max_degree();
            if total > caps.outer {
                return Err(EvalError(format!(
                    "product degree {total} exceeds the cap {} (raise with --cap)",
                    caps.outer
                )));
            }
            same_variant_binop!(x, y, u, v => product_impl(&u, &v)?, "mixed bases in a product")
        }
    }
}

trait OuterProduct: Sized {
    fn outer(x: &LinComb<Self>, y: &LinComb<Self>) -> Result<LinComb<Self>, EvalError>
    where
        Self: Ord + Clone;
}

fn product_impl<K: OuterProduct + Ord + Clone>(
    x: &LinComb<K>,
    y: &LinComb<K>,
) -> Result<LinComb<K>, EvalError> {
    K::outer(x, y)
}

macro_rules! outer_by {
    ($key:ty, $x:ident, $y:ident => $rule:expr) => {
        impl OuterProduct for $key {
            fn outer(
                x: &LinComb<Self>,
                y: &LinComb<Self>,
            ) -> Result<LinComb<Self>, EvalError> {
                Ok(LinComb::bilinear(x, y, |$x, $y| $rule))
            }
        }
    };
}

outer_by!(FKey, a, b => pqsym::f_product(&a.0, &b.0));
outer_by!(GKey, a, b => pqsym::g_product(&a.0, &b.0));
outer_by!(PsKey, a, b => sqsym::ps_product(&a.0, &b.0));
outer_by!(QsKey, a, b => sqsym::qs_product(&a.0, &b.0));
outer_by!(RsKey, a, b => sqsym::rs_product(&a.0, &b.0));
outer_by!(PcatKey, a, b => LinComb::unit(cqsym::pcat_product(&a.0, &b.0)));
outer_by!(MmKey, a, b => cqsym::mm_product(&a.0, &b.0));
outer_by!(RcatKey, a, b => cqsym::rcat_product(&a.0, &b.0));
outer_by!(PscKey, a, b => scqsym::psc_product(&a.0, &b.0));
outer_by!(QscKey, a, b => scqsym::qsc_product(&a.0, &b.0));
outer_by!(FscKey, a, b => scqsym::fsc_product(&a.0, &b.0));
outer_by!(RscKey, a, b => scqsym::rsc_product(&a.0, &b.0));
outer_by!(SKey, a, b => LinComb::unit(ncsf::s_product(&a.0, &b.0)));
outer_by!(FqKey, a, b => pqsym::qsym_f_product(&a.0, &b.0));
outer_by!(MqKey, a, b => ncsf::m_qsym_product(&a.0, &b.0));

impl OuterProduct for RKey {
    fn outer(x: &LinComb<Self>, y: &LinComb<Self>) -> Result<LinComb<Self>, EvalError> {
        Ok(ncsf::r_product(x, y))
    }
}

fn internal(a: Value, b: Value, caps: Caps) -> Result<Value, EvalError> {
    let (x, y) = match (a, b) {
        (Value::Elem(x), Value::Elem(y)) => (x, y),
        _ => return Err(EvalError("internal product applies to elements".into())),
    };
    let deg = x.max_degree().max(y.max_degree());
    if deg > caps.internal {
        return Err(EvalError(format!(
            "internal product degree {deg} exceeds the cap {} (raise with --cap)",
            caps.internal
        )));
    }
    match (x, y) {
        (AnyElem::F(x), AnyElem::F(y)) => {
            let mut mismatch = None;
            let out = LinComb::bilinear(&x, &y, |a, b| {
                if a.0.len() != b.0.len() {
                    mismatch = Some((a.0.clone(), b.0.clone()));
                    LinComb::zero()
                } else {
                    LinComb::unit(FKey(pqsym::internal_f(&a.0, &b.0)))
                }
            });
            if let Some((a, b)) = mismatch {
                return Err(EvalError(format!(
                    "internal product needs equal degrees, got {a} and {b}"
                )));
            }
            Ok(Value::Elem(AnyElem::F(out)))
        }
        (AnyElem::Pcat(x), AnyElem::Pcat(y)) => {
            let mut mismatch = None;
            let out = LinComb::bilinear(&x, &y, |a, b| {
                if a.0.len() != b.0.len() {
                    mismatch = Some((a.0.clone(), b.0.clone()));
                    LinComb::zero()
                } else {
                    cqsym::internal_pcat(&a.0, &b.0)
                }
            });
            if let Some((a, b)) = mismatch {
                return Err(EvalError(format!(
                    "internal product needs equal degrees, got {a} and {b}"
                )));
            }
            Ok(Value::Elem(AnyElem::Pcat(out)))
        }
        (x, _) => Err(EvalError(format!(
            "the internal product lives on F and PCat, not {}",
            x.basis_name()
        ))),
    }
}

fn coproduct(x: &AnyElem) -> Result<AnyTensor, EvalError> {
    Ok(match x {
        AnyElem::F(x) => AnyTensor::F(x.map_colinear(|k| pqsym::f_coproduct(&k.0))),
        AnyElem::G(x) => AnyTensor::G(x.map_colinear(|k| pqsym::g_coproduct(&k.0))),
        AnyElem::Ps(x) => AnyTensor::Ps(x.map_colinear(|k| sqsym::ps_coproduct(&k.0))),
        AnyElem::Qs(x) => AnyTensor::Qs(x.map_colinear(|k| sqsym::qs_coproduct(&k.0))),
        AnyElem::Pcat(x) => AnyTensor::Pcat(x.map_colinear(|k| cqsym::pcat_coproduct(&k.0))),
        AnyElem::Mm(x) => AnyTensor::Mm(x.map_colinear(|k| cqsym::mm_coproduct(&k.0))),
        AnyElem::Psc(x) => AnyTensor::Psc(x.map_colinear(|k| scqsym::psc_coproduct(&k.0))),
        AnyElem::Qsc(x) => AnyTensor::Qsc(x.map_colinear(|k| scqsym::qsc_coproduct(&k.0))),
        AnyElem::Fsc(x) => AnyTensor::Fsc(x.map_colinear(|k| scqsym::fsc_coproduct(&k.0))),
        other => {
            return Err(EvalError(format!(
                "no coproduct registered for basis {}",
                other.basis_name()
            )))
        }
    })
}

fn half_coproduct(x: &AnyElem, left: bool) -> Result<AnyTensor, EvalError> {
    Ok(match x {
        AnyElem::F(x) => AnyTensor::F(x.map_colinear(|k| {
            let (l, r) = pqsym::f_half_coproducts(&k.0);
            if left {
                l
            } else {
                r
            }
        })),
        AnyElem::G(x) => AnyTensor::G(x.map_colinear(|k| {
            let (l, r) = pqsym::g_half_coproducts(&k.0);
            if left {
                l
            } else {
                r
            }
        })),
        other => {
            return Err(EvalError(format!(
                "half coproducts live on F and G, not {}",
                other.basis_name()
            )))
        }
    })
}
