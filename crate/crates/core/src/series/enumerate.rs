//! Distribution series obtained by exhaustive enumeration.

use rayon::prelude::*;
use serde::Serialize;

use super::TruncatedSeries;
use crate::error::{Error, Result};
use crate::objects::{avoiders, dyck_paths, Pattern, Permutation};
use crate::poly::{BivariatePolynomial, LaurentPoly2};
use crate::statistics::{descent_set, dyck_profile, mna, peak_profile, run_profile};

/// Largest truncation order enumerated unless configured otherwise.
pub const DEFAULT_MAX_ORDER: usize = 12;

/// Builds distribution series up to a fixed order. Coefficient `t^n` comes
/// from enumerating the objects of size `n`; sizes are processed in parallel.
#[derive(Clone, Copy, Debug)]
pub struct SeriesLab {
    order: usize,
}

/// The four Dyck path series split by the parity of the first and last
/// composition parts, weighted by `x^{op} y^{ep}`.
#[derive(Clone, Debug)]
pub struct DyckParts {
    pub ee: TruncatedSeries,
    pub eo: TruncatedSeries,
    pub oe: TruncatedSeries,
    pub oo: TruncatedSeries,
}

/// Stack-sortable permutations of even and odd length, weighted by left
/// peak parities (`le`, `lo`) and by interior peak parities (`e`, `o`).
#[derive(Clone, Debug)]
pub struct PeakParts {
    pub le: TruncatedSeries,
    pub lo: TruncatedSeries,
    pub e: TruncatedSeries,
    pub o: TruncatedSeries,
}

fn tally(pairs: impl IntoIterator<Item = (usize, usize)>) -> LaurentPoly2 {
    BivariatePolynomial::from_pairs(pairs).as_laurent().clone()
}

impl SeriesLab {
    pub fn new(order: usize, bound: usize) -> Result<SeriesLab> {
        if order > bound {
            return Err(Error::BoundExceeded {
                what: "series order",
                requested: order,
                bound,
            });
        }
        Ok(SeriesLab { order })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn build<F>(&self, coeff: F) -> TruncatedSeries
    where
        F: Fn(usize) -> LaurentPoly2 + Sync,
    {
        let coeffs: Vec<LaurentPoly2> = (0..=self.order)
            .into_par_iter()
            .map(|n| if n == 0 { LaurentPoly2::zero() } else { coeff(n) })
            .collect();
        TruncatedSeries::from_coeffs(coeffs, self.order)
    }

    fn over_avoiders<F>(&self, pattern: Pattern, weight: F) -> TruncatedSeries
    where
        F: Fn(&Permutation) -> (usize, usize) + Sync,
    {
        self.build(|n| tally(avoiders(n, pattern).iter().map(&weight)))
    }

    /// `Σ t^n Σ_{S_n(321)} x^{oar} y^{ear}`.
    pub fn g_restricted(&self) -> TruncatedSeries {
        self.over_avoiders(Pattern::P321, |p| {
            let r = run_profile(p);
            (r.oar, r.ear)
        })
    }

    /// `Σ t^n Σ_{D_n} x^{op} y^{ep}`; equal to [`Self::g_restricted`].
    pub fn g_dyck(&self) -> TruncatedSeries {
        self.build(|n| {
            tally(dyck_paths(n).iter().map(|d| {
                let prof = dyck_profile(d).expect("n >= 1");
                (prof.op, prof.ep)
            }))
        })
    }

    pub fn dyck_parts(&self) -> DyckParts {
        let split: Vec<[LaurentPoly2; 4]> = (0..=self.order)
            .into_par_iter()
            .map(|n| {
                let mut buckets: [Vec<(usize, usize)>; 4] = Default::default();
                if n > 0 {
                    for d in dyck_paths(n) {
                        let prof = dyck_profile(&d).expect("n >= 1");
                        let slot = 2 * (prof.initial % 2) + prof.terminal % 2;
                        buckets[slot].push((prof.op, prof.ep));
                    }
                }
                buckets.map(tally)
            })
            .collect();
        let column = |i: usize| {
            TruncatedSeries::from_coeffs(split.iter().map(|c| c[i].clone()).collect(), self.order)
        };
        DyckParts {
            ee: column(0),
            eo: column(1),
            oe: column(2),
            oo: column(3),
        }
    }

    /// `Σ t^n Σ_{S_n(σ)} x^{lpk_e} y^{lpk_o}` for σ = 321 or 231.
    pub fn left_peaks(&self, pattern: Pattern) -> TruncatedSeries {
        self.over_avoiders(pattern, |p| {
            let pk = peak_profile(p);
            (pk.lpk_e, pk.lpk_o)
        })
    }

    /// The series `M` over 321-avoiders.
    pub fn m_restricted(&self) -> TruncatedSeries {
        self.left_peaks(Pattern::P321)
    }

    /// The series `M` over 231-avoiders.
    pub fn m_stack_sortable(&self) -> TruncatedSeries {
        self.left_peaks(Pattern::P231)
    }

    pub fn peak_parts(&self) -> PeakParts {
        let lpk = self.left_peaks(Pattern::P231);
        let pk = self.over_avoiders(Pattern::P231, |p| {
            let pk = peak_profile(p);
            (pk.pk_e, pk.pk_o)
        });
        let by_parity = |s: &TruncatedSeries, parity: usize| {
            let coeffs = s
                .coeffs()
                .iter()
                .enumerate()
                .map(|(n, c)| if n % 2 == parity { c.clone() } else { LaurentPoly2::zero() })
                .collect();
            TruncatedSeries::from_coeffs(coeffs, self.order)
        };
        PeakParts {
            le: by_parity(&lpk, 0),
            lo: by_parity(&lpk, 1),
            e: by_parity(&pk, 0),
            o: by_parity(&pk, 1),
        }
    }

    /// `G(t, x, 1)`: 321-avoiders by odd ascending runs.
    pub fn a(&self) -> TruncatedSeries {
        self.g_restricted().at_y_one()
    }

    /// `Σ t^n Σ_{S_n(321)} x^{des + shift}`.
    pub fn descents_restricted(&self, shift: usize) -> TruncatedSeries {
        self.over_avoiders(Pattern::P321, |p| (descent_set(p).len() + shift, 0))
    }
}

/// Counts of objects of size `n` by statistic value, one row per size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistributionTable {
    pub statistic: String,
    pub rows: Vec<TableRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: usize,
    /// `counts[k]` objects have statistic value `k`.
    pub counts: Vec<u64>,
}

impl TableRow {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

impl DistributionTable {
    /// Header `n,0,1,...`; short rows are padded with zeros.
    pub fn to_csv(&self) -> String {
        let width = self.rows.iter().map(|r| r.counts.len()).max().unwrap_or(0);
        let mut out = String::from("n");
        for k in 0..width {
            out.push_str(&format!(",{k}"));
        }
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.n.to_string());
            for k in 0..width {
                let c = row.counts.get(k).copied().unwrap_or_default();
                out.push_str(&format!(",{c}"));
            }
            out.push('\n');
        }
        out
    }
}

impl SeriesLab {
    /// Distribution of `mna` over 321-avoiders read off `A = G(t, x, 1)`: a
    /// permutation with `oar = j` odd ascending runs has `mna = (n - j) / 2`.
    pub fn mna_table_from_series(&self) -> Result<DistributionTable> {
        let a = self.a();
        let mut rows = Vec::with_capacity(self.order);
        for n in 1..=self.order {
            let mut counts = vec![0u64; n / 2 + 1];
            for (j, b, c) in a.coeff(n).terms() {
                let odd_runs = usize::try_from(j).ok().filter(|&k| k <= n && (n - k) % 2 == 0 && b == 0);
                let Some(odd_runs) = odd_runs else {
                    return Err(Error::Internal(format!("unexpected term {c}*x^{j}*y^{b} in [t^{n}]A")));
                };
                counts[(n - odd_runs) / 2] += u64::try_from(c)
                    .map_err(|_| Error::Internal(format!("count {c} in [t^{n}]A is not a small natural number")))?;
            }
            rows.push(TableRow { n, counts });
        }
        Ok(DistributionTable {
            statistic: "mna".into(),
            rows,
        })
    }

    /// The same table by direct enumeration.
    pub fn mna_table_enumerated(&self) -> DistributionTable {
        let rows = (1..=self.order)
            .into_par_iter()
            .map(|n| {
                let mut counts = vec![0u64; n / 2 + 1];
                for p in avoiders(n, Pattern::P321) {
                    counts[mna(&p)] += 1;
                }
                TableRow { n, counts }
            })
            .collect();
        DistributionTable {
            statistic: "mna".into(),
            rows,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objects::catalan;
    use num_bigint::BigInt;

    fn lab(order: usize) -> SeriesLab {
        SeriesLab::new(order, DEFAULT_MAX_ORDER).unwrap()
    }

    #[test]
    fn low_order_coefficients() {
        let g = lab(3).g_restricted();
        assert_eq!(g.coeff(1).to_string(), "x");
        assert_eq!(g.coeff(2).to_string(), "x^2 + y");
        assert_eq!(g.coeff(3).to_string(), "4*x*y + x");
        assert_eq!(lab(3).m_restricted().coeff(3).to_string(), "x + 3*y + 1");
    }

    #[test]
    fn routes_agree_and_specialise_to_catalan() {
        let l = lab(8);
        let g = l.g_restricted();
        assert_eq!(g, l.g_dyck());
        let parts = l.dyck_parts();
        let sum = &(&(&parts.ee + &parts.eo) + &parts.oe) + &parts.oo;
        assert_eq!(sum, g);
        for n in 1..=8 {
            let c = BigInt::from(catalan(n as u64));
            assert_eq!(g.coeff(n).sum_of_coefficients(), c);
            assert_eq!(l.m_stack_sortable().coeff(n).sum_of_coefficients(), c);
        }
    }

    #[test]
    fn order_is_bounded() {
        assert!(matches!(
            SeriesLab::new(13, DEFAULT_MAX_ORDER),
            Err(Error::BoundExceeded { requested: 13, .. })
        ));
    }

    #[test]
    fn mna_table_matches_enumeration() {
        let l = lab(7);
        let table = l.mna_table_from_series().unwrap();
        assert_eq!(table, l.mna_table_enumerated());
        assert_eq!(table.rows[2].counts, [0, 5]);
        assert!(table.to_csv().starts_with("n,0,1,2,3\n1,1,0,0,0\n"));
    }

    #[test]
    fn lowest_ee_term() {
        assert_eq!(lab(2).dyck_parts().ee.coeff(2).to_string(), "y");
    }
}
