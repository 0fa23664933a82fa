//! Winner predictions for named graph families, checked against the exact
//! solver over a fixed grid of instances.

mod report;

pub use report::{Report, Row, REPORT_VERSION};

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::game::{solve, GameError, Outcome, Position};
use crate::graph::{
    bridged_stars, cartesian_product, cayley_abelian, cycle, dangled_stars, even_caterpillar,
    find_involution, grid, hypercube, kneser, path, power, sunlet, torus, Graph, GraphError,
    GroupSpec,
};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("{family} {params:?} is outside the hypotheses: {reason}")]
    OutsideHypotheses {
        family: Family,
        params: Vec<usize>,
        reason: String,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("unknown family '{0}'")]
    UnknownFamily(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Path,
    Cycle,
    Hypercube,
    CyclePower,
    CycleProduct,
    OddGrid,
    Sunlet,
    EvenCaterpillar,
    DangledStars,
    BridgedOdd,
    Petersen,
    AbelianGroup,
    /// `C_n □ P_m` from a 2-involution of the cycle and a 1-involution of
    /// the path.
    InvolutionProduct,
    ConjectureEvenGrid,
}

impl Family {
    pub const ALL: [Family; 14] = [
        Family::Path,
        Family::Cycle,
        Family::Hypercube,
        Family::CyclePower,
        Family::CycleProduct,
        Family::OddGrid,
        Family::Sunlet,
        Family::EvenCaterpillar,
        Family::DangledStars,
        Family::BridgedOdd,
        Family::Petersen,
        Family::AbelianGroup,
        Family::InvolutionProduct,
        Family::ConjectureEvenGrid,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Hypercube => "hypercube",
            Family::CyclePower => "cycle_power",
            Family::CycleProduct => "cycle_product",
            Family::OddGrid => "odd_grid",
            Family::Sunlet => "sunlet",
            Family::EvenCaterpillar => "even_caterpillar",
            Family::DangledStars => "dangled_stars",
            Family::BridgedOdd => "bridged_odd",
            Family::Petersen => "petersen",
            Family::AbelianGroup => "abelian_group",
            Family::InvolutionProduct => "involution_product",
            Family::ConjectureEvenGrid => "conjecture_even_grid",
        }
    }

    /// The closed-form result being checked, in one line.
    pub fn statement(self) -> &'static str {
        match self {
            Family::Path => "D(P_n) is N iff n is odd or n in {2,6,8,10,12}",
            Family::Cycle => "D(C_n) is N iff n is odd and n != 5",
            Family::Hypercube => "D(Q_1) is N, D(Q_d) is P for d >= 2",
            Family::CyclePower => "C_n^(k) is P for even n >= 6 and 1 <= k < n/4",
            Family::CycleProduct => "C_n1 x ... x C_nd is P for even n1 >= 6, 3 <= n2 <= ... <= nd",
            Family::OddGrid => "P_k x P_m is N when km is odd",
            Family::Sunlet => "the k-sunlet is P for k >= 3",
            Family::EvenCaterpillar => "even internally r-regular caterpillars are P for r >= 3",
            Family::DangledStars => "K_{1,m} (m odd) dangled at every vertex by its center is P",
            Family::BridgedOdd => "a star bridged center to center with an odd number of copies is P",
            Family::Petersen => "the Petersen graph is P",
            Family::AbelianGroup => "even-order abelian groups with a good representation are P",
            Family::InvolutionProduct => "2-involutionary x 1-involutionary is P",
            Family::ConjectureEvenGrid => "open: P_k x P_m with km even is conjectured P",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| VerifyError::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Prediction {
    N,
    P,
    #[serde(rename = "open")]
    Open,
}

impl From<Outcome> for Prediction {
    fn from(o: Outcome) -> Self {
        match o {
            Outcome::N => Prediction::N,
            Outcome::P => Prediction::P,
        }
    }
}

impl fmt::Display for Prediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Prediction::N => "N",
            Prediction::P => "P",
            Prediction::Open => "open",
        })
    }
}

/// A family instance whose winner is predicted in closed form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub family: Family,
    pub params: Vec<usize>,
}

impl Claim {
    pub fn new(family: Family, params: &[usize]) -> Self {
        Claim {
            family,
            params: params.to_vec(),
        }
    }

    fn outside(&self, reason: impl Into<String>) -> VerifyError {
        VerifyError::OutsideHypotheses {
            family: self.family,
            params: self.params.clone(),
            reason: reason.into(),
        }
    }

    fn arity(&self, want: usize) -> Result<&[usize], VerifyError> {
        if self.params.len() == want {
            Ok(&self.params)
        } else {
            Err(self.outside(format!("expected {want} parameter(s)")))
        }
    }

    fn require(&self, ok: bool, reason: &str) -> Result<(), VerifyError> {
        if ok {
            Ok(())
        } else {
            Err(self.outside(reason))
        }
    }

    /// The predicted winner, or an error when the parameters fall outside
    /// the hypotheses of the family's result.
    pub fn predict(&self) -> Result<Prediction, VerifyError> {
        use Prediction::{Open, N, P};
        let p = &self.params;
        Ok(match self.family {
            Family::Path => {
                let n = self.arity(1)?[0];
                self.require(n >= 2, "n >= 2")?;
                if n % 2 == 1 || [2, 6, 8, 10, 12].contains(&n) {
                    N
                } else {
                    P
                }
            }
            Family::Cycle => {
                let n = self.arity(1)?[0];
                self.require(n >= 3, "n >= 3")?;
                if n % 2 == 1 && n != 5 {
                    N
                } else {
                    P
                }
            }
            Family::Hypercube => {
                let d = self.arity(1)?[0];
                self.require(d >= 1, "d >= 1")?;
                if d == 1 {
                    N
                } else {
                    P
                }
            }
            Family::CyclePower => {
                let (n, k) = (self.arity(2)?[0], p[1]);
                self.require(n >= 6 && n % 2 == 0, "n even and >= 6")?;
                self.require(k >= 1 && 4 * k < n, "1 <= k < n/4")?;
                P
            }
            Family::CycleProduct => {
                self.require(!p.is_empty(), "at least one cycle")?;
                self.require(p[0] >= 6 && p[0] % 2 == 0, "n1 even and >= 6")?;
                let rest = &p[1..];
                self.require(rest.iter().all(|&n| n >= 3), "n2.. >= 3")?;
                self.require(rest.windows(2).all(|w| w[0] <= w[1]), "n2 <= ... <= nd")?;
                P
            }
            Family::OddGrid => {
                let (k, m) = (self.arity(2)?[0], p[1]);
                self.require(k % 2 == 1 && m % 2 == 1, "km odd")?;
                N
            }
            Family::Sunlet => {
                self.require(self.arity(1)?[0] >= 3, "k >= 3")?;
                P
            }
            Family::EvenCaterpillar => {
                let (r, spine) = (self.arity(2)?[0], p[1]);
                self.require(r >= 3, "r >= 3")?;
                // spine 2 is K_2, whose first player wins at once
                self.require(spine >= 4 && spine % 2 == 0, "even spine of at least 4")?;
                P
            }
            Family::DangledStars => {
                let (n, m) = (self.arity(2)?[0], p[1]);
                self.require(n >= 3, "host cycle needs n >= 3")?;
                self.require(m % 2 == 1, "odd star size")?;
                P
            }
            Family::BridgedOdd => {
                let (m, k) = (self.arity(2)?[0], p[1]);
                self.require(m >= 2, "the star center must be a cut vertex (m >= 2)")?;
                self.require(k % 2 == 1, "odd number of copies")?;
                P
            }
            Family::Petersen => {
                self.arity(0)?;
                P
            }
            Family::AbelianGroup => {
                self.require(!p.is_empty() && p.iter().all(|&n| n >= 2), "moduli >= 2")?;
                let order: usize = p.iter().product();
                self.require(order % 2 == 0, "even order")?;
                let cyclic_lead = p[0] >= 6 && p[0] % 2 == 0;
                let cube_like = p.iter().all(|&n| n == 2 || n == 4) && p[..] != [2];
                self.require(cyclic_lead || cube_like, "good representation other than Z_2")?;
                P
            }
            Family::InvolutionProduct => {
                let (n, m) = (self.arity(2)?[0], p[1]);
                self.require(n >= 3 && m >= 1, "n >= 3, m >= 1")?;
                let two = find_involution(&cycle(n)?, 2).ok().flatten();
                let one = find_involution(&path(m)?, 1).ok().flatten();
                self.require(two.is_some(), "C_n needs a 2-involution")?;
                self.require(one.is_some(), "P_m needs a 1-involution")?;
                P
            }
            Family::ConjectureEvenGrid => {
                let (k, m) = (self.arity(2)?[0], p[1]);
                self.require(k > 1 && m > 1 && (k * m) % 2 == 0, "k, m > 1 and km even")?;
                Open
            }
        })
    }

    pub fn build(&self) -> Result<Graph, VerifyError> {
        let p = &self.params;
        let need = |want: usize| self.arity(want).map(|_| ());
        let g = match self.family {
            Family::Path => {
                need(1)?;
                path(p[0])?
            }
            Family::Cycle => {
                need(1)?;
                cycle(p[0])?
            }
            Family::Hypercube => {
                need(1)?;
                hypercube(p[0])?
            }
            Family::CyclePower => {
                need(2)?;
                power(&cycle(p[0])?, p[1])?
            }
            Family::CycleProduct => torus(p)?,
            Family::OddGrid | Family::ConjectureEvenGrid => {
                need(2)?;
                grid(p[0], p[1])?
            }
            Family::Sunlet => {
                need(1)?;
                sunlet(p[0])?
            }
            Family::EvenCaterpillar => {
                need(2)?;
                even_caterpillar(p[0], p[1])?
            }
            Family::DangledStars => {
                need(2)?;
                dangled_stars(p[0], p[1])?
            }
            Family::BridgedOdd => {
                need(2)?;
                bridged_stars(p[0], p[1])?
            }
            Family::Petersen => {
                need(0)?;
                kneser(5, 2)?
            }
            Family::AbelianGroup => cayley_abelian(&GroupSpec::canonical(p)?),
            Family::InvolutionProduct => {
                need(2)?;
                cartesian_product(&cycle(p[0])?, &path(p[1])?)?
            }
        };
        Ok(g)
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(usize::to_string).collect();
        write!(f, "{}({})", self.family, params.join(","))
    }
}

/// Builds the instance, solves it and compares with the prediction. A
/// budget overrun marks the row skipped.
pub fn check(c: &Claim, budget: u64) -> Result<Row, VerifyError> {
    let predicted = c.predict()?;
    let g = c.build()?;
    let start = Instant::now();
    let result = Position::initial(&g)
        .map_err(|e| c.outside(e.to_string()))
        .map(|q| solve(&q, budget))?;
    let millis = start.elapsed().as_millis() as u64;
    let mut row = Row {
        family: c.family,
        params: c.params.clone(),
        vertices: g.n(),
        predicted,
        solved: None,
        agree: None,
        nodes: 0,
        millis,
        skipped: false,
    };
    match result {
        Ok(v) => {
            row.solved = Some(v.outcome);
            row.nodes = v.nodes_expanded;
            if predicted != Prediction::Open {
                row.agree = Some(predicted == v.outcome.into());
            }
        }
        Err(GameError::BudgetExhausted { .. }) => {
            row.skipped = true;
            row.nodes = budget;
        }
        Err(e) => return Err(c.outside(e.to_string())),
    }
    Ok(row)
}

/// The fixed instance grid, in report order.
pub fn instance_grid() -> Vec<Claim> {
    use Family::*;
    let mut out = Vec::new();
    let mut add = |f: Family, params: &[&[usize]]| {
        out.extend(params.iter().map(|p| Claim::new(f, p)));
    };
    let ns: Vec<[usize; 1]> = (2..=20).map(|n| [n]).collect();
    add(Path, &ns.iter().map(|a| &a[..]).collect::<Vec<_>>());
    add(Cycle, &ns[1..].iter().map(|a| &a[..]).collect::<Vec<_>>());
    add(Hypercube, &[&[1], &[2], &[3], &[4]]);
    add(
        CyclePower,
        &[&[6, 1], &[8, 1], &[10, 1], &[10, 2], &[12, 1], &[12, 2], &[14, 3], &[16, 3]],
    );
    add(CycleProduct, &[&[6], &[6, 3], &[8, 3], &[6, 4], &[10, 3]]);
    add(OddGrid, &[&[1, 1], &[3, 3], &[3, 5], &[3, 7], &[5, 5]]);
    add(Sunlet, &[&[3], &[4], &[5], &[6], &[7], &[8]]);
    add(EvenCaterpillar, &[&[3, 4], &[3, 6], &[3, 8], &[4, 4], &[4, 6], &[5, 4]]);
    add(DangledStars, &[&[3, 1], &[3, 3], &[4, 1], &[4, 3], &[5, 1], &[6, 1], &[5, 3]]);
    add(BridgedOdd, &[&[2, 1], &[3, 1], &[4, 1], &[2, 3], &[3, 3], &[2, 5]]);
    add(Petersen, &[&[]]);
    add(
        AbelianGroup,
        &[&[4], &[2, 2], &[2, 4], &[2, 2, 2], &[4, 4], &[6], &[8], &[10], &[12], &[6, 2], &[6, 3]],
    );
    add(InvolutionProduct, &[&[4, 2], &[4, 4], &[6, 2], &[4, 6]]);
    add(ConjectureEvenGrid, &[&[2, 2], &[2, 3], &[2, 4], &[3, 4], &[4, 4], &[2, 8], &[4, 5]]);
    out
}

/// Checks every grid instance with at most `cap` vertices, in parallel.
pub fn run_suite(cap: usize, budget: u64) -> Result<Report, VerifyError> {
    let mut claims = Vec::new();
    for c in instance_grid() {
        if c.build()?.n() <= cap {
            claims.push(c);
        }
    }
    let rows = claims
        .par_iter()
        .map(|c| check(c, budget))
        .collect::<Result<Vec<Row>, _>>()?;
    let (exploratory, rows) = rows
        .into_iter()
        .partition(|r| r.predicted == Prediction::Open);
    Ok(Report {
        version: REPORT_VERSION,
        cap,
        budget,
        rows,
        exploratory,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn predict(f: Family, p: &[usize]) -> Result<Prediction, VerifyError> {
        Claim::new(f, p).predict()
    }

    #[test]
    fn predictions() {
        assert_eq!(predict(Family::Path, &[12]).unwrap(), Prediction::N);
        assert_eq!(predict(Family::Path, &[14]).unwrap(), Prediction::P);
        assert_eq!(predict(Family::Cycle, &[5]).unwrap(), Prediction::P);
        assert_eq!(predict(Family::Cycle, &[7]).unwrap(), Prediction::N);
        assert_eq!(predict(Family::OddGrid, &[3, 5]).unwrap(), Prediction::N);
        assert_eq!(predict(Family::ConjectureEvenGrid, &[2, 4]).unwrap(), Prediction::Open);
        assert_eq!(predict(Family::AbelianGroup, &[2, 4]).unwrap(), Prediction::P);
        assert_eq!(predict(Family::InvolutionProduct, &[4, 2]).unwrap(), Prediction::P);
    }

    #[test]
    fn hypotheses_are_enforced() {
        for (f, p) in [
            (Family::Path, &[1][..]),
            (Family::CyclePower, &[8, 2]),
            (Family::CyclePower, &[7, 1]),
            (Family::CycleProduct, &[6, 5, 4]),
            (Family::CycleProduct, &[4, 4]),
            (Family::OddGrid, &[3, 4]),
            (Family::EvenCaterpillar, &[3, 2]),
            (Family::DangledStars, &[3, 2]),
            (Family::BridgedOdd, &[1, 1]),
            (Family::BridgedOdd, &[2, 2]),
            (Family::AbelianGroup, &[2]),
            (Family::AbelianGroup, &[3, 3]),
            (Family::AbelianGroup, &[4, 3, 2]),
            (Family::InvolutionProduct, &[3, 2]),
            (Family::InvolutionProduct, &[4, 3]),
            (Family::ConjectureEvenGrid, &[3, 3]),
            (Family::Petersen, &[1]),
        ] {
            assert!(
                matches!(predict(f, p), Err(VerifyError::OutsideHypotheses { .. })),
                "{f} {p:?}"
            );
        }
    }

    #[test]
    fn grid_is_within_hypotheses() {
        for c in instance_grid() {
            c.predict().unwrap();
            assert!(c.build().unwrap().n() <= 64);
        }
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("moebius".parse::<Family>().is_err());
    }

    #[test]
    fn check_rows() {
        let row = check(&Claim::new(Family::Petersen, &[]), 1_000_000).unwrap();
        assert_eq!((row.solved, row.agree, row.skipped), (Some(Outcome::P), Some(true), false));
        let row = check(&Claim::new(Family::Hypercube, &[2]), 1_000_000).unwrap();
        assert_eq!(row.agree, Some(true));
        let row = check(&Claim::new(Family::ConjectureEvenGrid, &[2, 4]), 1_000_000).unwrap();
        assert_eq!((row.predicted, row.agree), (Prediction::Open, None));
        assert!(row.solved.is_some());
        let row = check(&Claim::new(Family::Cycle, &[16]), 3).unwrap();
        assert!(row.skipped && row.solved.is_none() && row.agree.is_none());
    }
}
