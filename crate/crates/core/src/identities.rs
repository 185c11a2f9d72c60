//! Exact identity checks over explicit element samples.
//!
//! Each check evaluates both sides of an identity with the supplied
//! operations and records every sample on which they differ.

use crate::algebra::Weight;
use crate::error::Result;
use crate::lincomb::LinComb;
use crate::word::Alphabet;

#[derive(Clone, Debug)]
pub struct Violation {
    pub witness: Vec<LinComb>,
    pub lhs: LinComb,
    pub rhs: LinComb,
    /// Free-form description for failures that are not an equation.
    pub note: Option<String>,
}

impl Violation {
    fn size(&self) -> usize {
        self.witness
            .iter()
            .flat_map(|x| x.words())
            .map(|w| w.deg() + w.rdeg())
            .sum()
    }
}

/// Outcome of one identity over a sample.
#[derive(Clone, Debug)]
pub struct Report {
    pub property: String,
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn new(property: impl Into<String>) -> Self {
        Report {
            property: property.into(),
            checked: 0,
            violations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Counts one check and records a violation when `lhs != rhs`.
    pub fn record(&mut self, witness: &[&LinComb], lhs: LinComb, rhs: LinComb) {
        self.checked += 1;
        if lhs != rhs {
            self.violations.push(Violation {
                witness: witness.iter().map(|x| (*x).clone()).collect(),
                lhs,
                rhs,
                note: None,
            });
        }
    }

    /// Counts one check and records a violation when `ok` is false.
    pub fn record_if(&mut self, ok: bool, witness: &[&LinComb], note: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations.push(Violation {
                witness: witness.iter().map(|x| (*x).clone()).collect(),
                lhs: LinComb::zero(),
                rhs: LinComb::zero(),
                note: Some(note()),
            });
        }
    }

    /// The violation with the smallest witness.
    pub fn minimal_witness(&self) -> Option<&Violation> {
        self.violations.iter().min_by_key(|v| v.size())
    }

    pub fn merge(&mut self, other: Report) {
        self.checked += other.checked;
        self.violations.extend(other.violations);
    }

    /// `PASS <property> checked=<n>`, or `FAIL <property> (<witness>) ...`
    /// naming the smallest violating sample.
    pub fn render(&self, alphabet: &Alphabet) -> String {
        match self.minimal_witness() {
            None => format!("PASS {} checked={}", self.property, self.checked),
            Some(v) => {
                let w: Vec<String> = v.witness.iter().map(|x| x.display(alphabet)).collect();
                let detail = match &v.note {
                    Some(n) => n.clone(),
                    None => format!(
                        "lhs={} rhs={}",
                        v.lhs.display(alphabet),
                        v.rhs.display(alphabet)
                    ),
                };
                format!(
                    "FAIL {} ({}) {} violations={}/{}",
                    self.property,
                    w.join(", "),
                    detail,
                    self.violations.len(),
                    self.checked
                )
            }
        }
    }
}

type Op<'a> = &'a dyn Fn(&LinComb, &LinComb) -> Result<LinComb>;

/// `a*b = -(b*a)` and `a*a = 0`.
pub fn check_anticommutative(mul: Op<'_>, pairs: &[(LinComb, LinComb)]) -> Result<Report> {
    let mut r = Report::new("anticomm");
    for (a, b) in pairs {
        r.record(&[a, b], mul(a, b)?, -mul(b, a)?);
        r.record(&[a, a], mul(a, a)?, LinComb::zero());
    }
    Ok(r)
}

/// `(a*b)*c + (b*c)*a + (c*a)*b = 0`.
pub fn jacobiator(mul: Op<'_>, a: &LinComb, b: &LinComb, c: &LinComb) -> Result<LinComb> {
    let mut j = mul(&mul(a, b)?, c)?;
    j += &mul(&mul(b, c)?, a)?;
    j += &mul(&mul(c, a)?, b)?;
    Ok(j)
}

pub fn check_jacobi(mul: Op<'_>, triples: &[(LinComb, LinComb, LinComb)]) -> Result<Report> {
    let mut r = Report::new("jacobi");
    for (a, b, c) in triples {
        r.record(&[a, b, c], jacobiator(mul, a, b, c)?, LinComb::zero());
    }
    Ok(r)
}

/// `[R(x),R(y)] = R([R(x),y] + [x,R(y)] + weight*[x,y])`.
pub fn check_rota_baxter(
    mul: Op<'_>,
    r_op: &dyn Fn(&LinComb) -> Result<LinComb>,
    weight: Weight,
    pairs: &[(LinComb, LinComb)],
) -> Result<Report> {
    let mut rep = Report::new("rb");
    for (x, y) in pairs {
        let rx = r_op(x)?;
        let ry = r_op(y)?;
        let lhs = mul(&rx, &ry)?;
        let mut inner = mul(&rx, y)?;
        inner += &mul(x, &ry)?;
        inner.add_scaled(&mul(x, y)?, &weight.as_q());
        rep.record(&[x, y], lhs, r_op(&inner)?);
    }
    Ok(rep)
}

/// Associator-symmetry form of the pre-Lie law:
/// `(x.y).z - x.(y.z) = (y.x).z - y.(x.z)`.
pub fn check_pre_lie(dot: Op<'_>, triples: &[(LinComb, LinComb, LinComb)]) -> Result<Report> {
    let mut r = Report::new("pre-lie");
    for (x, y, z) in triples {
        let lhs = &mul2(dot, x, y, z)? - &dot(x, &dot(y, z)?)?;
        let rhs = &mul2(dot, y, x, z)? - &dot(y, &dot(x, z)?)?;
        r.record(&[x, y, z], lhs, rhs);
    }
    Ok(r)
}

fn mul2(op: Op<'_>, x: &LinComb, y: &LinComb, z: &LinComb) -> Result<LinComb> {
    op(&op(x, y)?, z)
}

/// The two post-Lie laws:
/// `(x.y).z - x.(y.z) - (y.x).z + y.(x.z) = [y,x].z` and
/// `x.[y,z] = [x.y,z] + [y,x.z]`.
pub fn check_post_lie(
    dot: Op<'_>,
    bracket: Op<'_>,
    triples: &[(LinComb, LinComb, LinComb)],
) -> Result<(Report, Report)> {
    let mut first = Report::new("post-lie-assoc");
    let mut second = Report::new("post-lie-derivation");
    for (x, y, z) in triples {
        let mut lhs = mul2(dot, x, y, z)?;
        lhs -= &dot(x, &dot(y, z)?)?;
        lhs -= &mul2(dot, y, x, z)?;
        lhs += &dot(y, &dot(x, z)?)?;
        let rhs = dot(&bracket(y, x)?, z)?;
        first.record(&[x, y, z], lhs, rhs);

        let lhs = dot(x, &bracket(y, z)?)?;
        let mut rhs = bracket(&dot(x, y)?, z)?;
        rhs += &bracket(y, &dot(x, z)?)?;
        second.record(&[x, y, z], lhs, rhs);
    }
    Ok((first, second))
}
