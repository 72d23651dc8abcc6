use std::collections::BTreeMap;

use ga_core::geometry::{distance_to_line, line_contains, plane_contains, triangle_area, Line, Plane, Triangle};
use ga_core::stereo::{prob_minus, prob_plus, stereo_project, stereo_unproject, PlanePoint, SpherePoint};
use ga_core::{
    cross_product, dual_g3, exp_bivector, inverse, project, reflect_in_plane, reflect_normal, reject, rotate,
    rotor_between, rotor_from_reflections, GaError, Multivector, Rotor, Signature, Tolerance,
};
use thiserror::Error;

use crate::ast::{BinOp, Expr, Func, Statement};

/// Comparison tolerance used by `assert` and the containment tests when
/// neither `GA_TOL` nor `:tol` says otherwise.
pub const DEFAULT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error("unbound variable '{0}'")]
    Unbound(String),
    #[error(transparent)]
    Ga(#[from] GaError),
    #[error("{func}: {message}")]
    Argument { func: &'static str, message: String },
}

#[derive(Debug, Clone, PartialEq)]
pub struct AssertOutcome {
    pub passed: bool,
    /// Largest coefficient difference between the two sides.
    pub residual: f64,
    pub tol: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Value(Multivector),
    Bound { name: String, value: Multivector },
    Assert(AssertOutcome),
}

/// Evaluation context: the active algebra, variable bindings and tolerance.
#[derive(Debug, Clone)]
pub struct Environment {
    sig: Signature,
    bindings: BTreeMap<String, Multivector>,
    tol: f64,
}

impl Environment {
    pub fn new(sig: Signature) -> Self {
        Environment {
            sig,
            bindings: BTreeMap::new(),
            tol: DEFAULT_TOL,
        }
    }

    /// Like [`Environment::new`], taking the tolerance from `GA_TOL` if set.
    pub fn from_env(sig: Signature) -> Result<Self, String> {
        let mut env = Environment::new(sig);
        if let Ok(raw) = std::env::var("GA_TOL") {
            env.set_tol(parse_tol(&raw).map_err(|e| format!("GA_TOL: {e}"))?);
        }
        Ok(env)
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    /// Switches algebra. Existing bindings belong to the old algebra and
    /// are dropped.
    pub fn set_sig(&mut self, sig: Signature) {
        self.sig = sig;
        self.bindings.clear();
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn set_tol(&mut self, tol: f64) {
        self.tol = tol;
    }

    pub fn get(&self, name: &str) -> Option<&Multivector> {
        self.bindings.get(name)
    }

    pub fn bind(&mut self, name: impl Into<String>, value: Multivector) -> Result<(), EvalError> {
        if value.sig() != self.sig {
            return Err(GaError::SignatureMismatch {
                left: self.sig,
                right: value.sig(),
            }
            .into());
        }
        self.bindings.insert(name.into(), value);
        Ok(())
    }

    pub fn bindings(&self) -> impl Iterator<Item = (&str, &Multivector)> {
        self.bindings.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn execute(&mut self, stmt: &Statement) -> Result<Outcome, EvalError> {
        match stmt {
            Statement::Let(name, e) => {
                let value = self.evaluate(e)?;
                self.bindings.insert(name.clone(), value.clone());
                Ok(Outcome::Bound {
                    name: name.clone(),
                    value,
                })
            }
            Statement::Assert { lhs, rhs, tol } => self.check(lhs, rhs, *tol).map(Outcome::Assert),
            Statement::Expr(e) => self.evaluate(e).map(Outcome::Value),
        }
    }

    /// Evaluates both sides and compares them coefficientwise with
    /// `|x - y| <= tol (1 + max(|x|, |y|))`.
    pub fn check(&self, lhs: &Expr, rhs: &Expr, tol: Option<f64>) -> Result<AssertOutcome, EvalError> {
        let tol = tol.unwrap_or(self.tol);
        let (l, r) = (self.evaluate(lhs)?, self.evaluate(rhs)?);
        Ok(AssertOutcome {
            passed: l.approx_eq(&r, Tolerance::uniform(tol)),
            residual: l.max_abs_diff(&r),
            tol,
        })
    }

    pub fn evaluate(&self, e: &Expr) -> Result<Multivector, EvalError> {
        Ok(match e {
            Expr::Number(x) => Multivector::scalar(self.sig, *x),
            Expr::Blade(b) => Multivector::blade(self.sig, *b, 1.0)?,
            Expr::Var(name) => self
                .bindings
                .get(name)
                .cloned()
                .ok_or_else(|| EvalError::Unbound(name.clone()))?,
            Expr::Neg(x) => -self.evaluate(x)?,
            Expr::Reverse(x) => self.evaluate(x)?.reverse(),
            Expr::Binary(op, l, r) => {
                let (l, r) = (self.evaluate(l)?, self.evaluate(r)?);
                match op {
                    BinOp::Add => l.try_add(&r)?,
                    BinOp::Sub => l.try_sub(&r)?,
                    BinOp::Mul => l.gp(&r)?,
                    BinOp::Div => l.gp(&inverse(&r)?)?,
                    BinOp::Wedge => l.wedge(&r)?,
                    BinOp::Inner => l.inner(&r)?,
                }
            }
            Expr::Call(func, args) => {
                let args = args.iter().map(|a| self.evaluate(a)).collect::<Result<Vec<_>, _>>()?;
                self.call(*func, args)?
            }
        })
    }

    fn call(&self, func: Func, mut args: Vec<Multivector>) -> Result<Multivector, EvalError> {
        let scalar = |x: f64| Multivector::scalar(self.sig, x);
        let flag = |b: bool| scalar(if b { 1.0 } else { 0.0 });
        let take = |args: &mut Vec<Multivector>| args.remove(0);
        let (a, rest) = (take(&mut args), args);
        let b = || rest.first().expect("arity checked by the parser");
        let c = || rest.get(1).expect("arity checked by the parser");
        Ok(match func {
            Func::Exp => exp_bivector(&a)?,
            Func::Rev => a.reverse(),
            Func::Inv => inverse(&a)?,
            Func::Grade => a.grade_part(grade_index(b(), self.sig)?),
            Func::Norm => scalar(a.norm()),
            Func::Dual => dual_g3(&a)?,
            Func::Cross => cross_product(&a, b())?,
            Func::Proj => project(&a, b())?,
            Func::Rej => reject(&a, b())?,
            Func::Reflect => reflect_in_plane(&a, b())?,
            Func::ReflectN => reflect_normal(&a, b())?,
            Func::Rot => rotate(&a, &Rotor::new(b().clone())?)?,
            Func::Rotor => rotor_between(&a, b())?.into_multivector(),
            Func::Rotor2 => rotor_from_reflections(&a, b())?.into_multivector(),
            Func::Stereo => stereo_project(&SpherePoint::new(a)?)?.vector().clone(),
            Func::Unstereo => stereo_unproject(&PlanePoint::new(a)?).vector().clone(),
            Func::ProbP => scalar(prob_plus(&SpherePoint::new(a)?, &SpherePoint::new(b().clone())?)),
            Func::ProbM => scalar(prob_minus(&SpherePoint::new(a)?, &SpherePoint::new(b().clone())?)),
            Func::Dist => scalar(distance_to_line(&Line::new(a, b().clone())?, c())?),
            Func::Line => flag(line_contains(&Line::new(a, b().clone())?, c(), self.tol)?),
            Func::Plane => flag(plane_contains(&Plane::new(a, b().clone())?, c(), self.tol)?),
            Func::Area => scalar(triangle_area(&Triangle::from_sides(a, b().clone())?)?),
        })
    }
}

fn grade_index(k: &Multivector, sig: Signature) -> Result<usize, EvalError> {
    let err = |message: String| EvalError::Argument { func: "grade", message };
    if !k.is_grade(0) {
        return Err(err(format!("grade must be a scalar, got {k}")));
    }
    let x = k.scalar_part();
    if x.fract() != 0.0 || x < 0.0 || x > sig.dim() as f64 {
        return Err(err(format!("grade must be an integer in 0..={}, got {x}", sig.dim())));
    }
    Ok(x as usize)
}

pub fn parse_tol(raw: &str) -> Result<f64, String> {
    match raw.trim().parse::<f64>() {
        Ok(t) if t.is_finite() && t >= 0.0 => Ok(t),
        _ => Err(format!("expected a non-negative number, got '{}'", raw.trim())),
    }
}

/// Parses `p,q` (or `p q`) into a signature.
pub fn parse_signature(raw: &str) -> Result<Signature, String> {
    let parts: Vec<&str> = raw
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .collect();
    let [p, q] = parts.as_slice() else {
        return Err(format!("expected a signature 'p,q', got '{}'", raw.trim()));
    };
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| format!("expected a non-negative integer, got '{s}'"))
    };
    Signature::new(num(p)?, num(q)?).map_err(|e| e.to_string())
}
