//! The verification suites behind each subcommand.

use std::time::Instant;

use barhodge::{bar_cohomology_table, cohomology_ring_pn, wrapping_weight_sequence, BarComplex};
use corelin::{BidegreeTable, Matrix};
use monodromic::random::{random_normal_form, random_tuple};
use monodromic::{
    block_tuple, decompose, fourier, fourier_tuple, homext, synthesize, Block, BlockKind, HalfTwist, MonodromicError,
    MonodromicTuple, NormalForm, Vertex,
};
use pathalg::{
    construct_agamma, construct_ginzburg, construct_lgamma, construct_mgamma, ext_kk_table, ext_table, koszul_check,
    lgamma_dim_closed, verify_lgamma_resolution, Bidegree, KoszulMode, PresentedAlgebra,
};
use plumbing::{endo_dim_relcore, endo_table, EndoVariant};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::{CliError, Check, Report};

fn require(cond: bool, msg: &str) -> Result<(), CliError> {
    if cond {
        Ok(())
    } else {
        Err(CliError::Usage(msg.to_string()))
    }
}

fn catalog(kind: BlockKind, size: usize) -> Result<MonodromicTuple, CliError> {
    block_tuple(kind, size).map_err(CliError::internal)
}

/// Hom/Ext fixtures between catalog blocks of size ≤ `smax`: `A_s → A_{s'}`
/// (s' < s) and `A_s → P_{s'}` (s' ≤ s) are `(s', s')`, `ℂ₀ → A_s` is
/// `(1, 1)`. `corrupt` swaps the `A` catalog for `B` as a negative control.
pub fn verify_homtables(smax: usize, corrupt: bool) -> Result<Report, CliError> {
    require(smax >= 1, "--smax must be at least 1")?;
    let started = Instant::now();
    let mut report = Report::new("verify-homtables").param("smax", smax);
    if corrupt {
        report = report.param("corrupt_catalog", true);
    }
    let a = |s: usize| catalog(if corrupt { BlockKind::B } else { BlockKind::A }, s);
    let sky = catalog(BlockKind::Sky, 1)?;
    for s in 1..=smax {
        for sp in 1..s {
            let actual = homext(&a(s)?, &a(sp)?);
            report.push(Check::compare(format!("hom A{s} -> A{sp}"), (sp, sp), actual));
        }
        for sp in 1..=s {
            let actual = homext(&a(s)?, &catalog(BlockKind::P, sp)?);
            report.push(Check::compare(format!("hom A{s} -> P{sp}"), (sp, sp), actual));
        }
        report.push(Check::compare(format!("hom Sky -> A{s}"), (1, 1), homext(&sky, &a(s)?)));
    }
    Ok(report.finish(started))
}

/// The JSON form of a tuple: `{"psi": p, "phi": f, "can": [[..]], "var": [[..]]}`
/// with `can` of shape `φ × ψ`, `var` of shape `ψ × φ` and entries given as
/// integers or rational strings.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TupleInput {
    psi: usize,
    phi: usize,
    can: Matrix,
    var: Matrix,
}

/// Parses a tuple; malformed JSON and shape mismatches are usage errors,
/// a non-nilpotent `var·can` is an invariant violation.
pub fn parse_tuple(json: &str) -> Result<MonodromicTuple, CliError> {
    let input: TupleInput = serde_json::from_str(json).map_err(|e| CliError::Usage(format!("invalid tuple JSON: {e}")))?;
    let shape = |m: Matrix, r, c| m.reshape_empty(r, c).map_err(|e| CliError::Usage(format!("invalid tuple shape: {e}")));
    let can = shape(input.can, input.phi, input.psi)?;
    let var = shape(input.var, input.psi, input.phi)?;
    MonodromicTuple::new(input.psi, input.phi, can, var).map_err(|e| match e {
        MonodromicError::NotNilpotent => CliError::Invariant(e.to_string()),
        other => CliError::Usage(other.to_string()),
    })
}

#[derive(Serialize)]
struct NormalFormOutput<'a> {
    text: String,
    blocks: &'a [Block],
}

fn nf_output(nf: &NormalForm) -> NormalFormOutput<'_> {
    NormalFormOutput {
        text: nf.to_string(),
        blocks: nf.blocks(),
    }
}

/// The Fourier transform of one tuple: its normal form before and after,
/// checked against the tuple-level transform and for involutivity.
pub fn fourier_input(json: &str) -> Result<Report, CliError> {
    let started = Instant::now();
    let t = parse_tuple(json)?;
    let mut report = Report::new("fourier").param("mode", "input");
    let nf = decompose(&t).map_err(CliError::internal)?;
    let image = fourier(&nf).map_err(CliError::internal)?;
    let back = fourier(&image).map_err(CliError::internal)?;
    let (ft, _) = fourier_tuple(&t, HalfTwist::ZERO);
    let tuple_image = decompose(&ft).map_err(CliError::internal)?;
    report.push(Check::compare("involution", &nf, &back));
    report.push(Check::compare(
        "tuple transform agrees up to twists",
        image.forget_twists(),
        tuple_image.forget_twists(),
    ));
    report.set_output(json!({ "input": nf_output(&nf), "fourier": nf_output(&image) }));
    Ok(report.finish(started))
}

/// FL∘FL = id on `trials` random tuples of total dimension ≤ `dims`, on their
/// normal forms and on decorated random normal forms.
pub fn fourier_roundtrip(dims: usize, trials: usize, seed: u64) -> Result<Report, CliError> {
    require(dims >= 1, "--dims must be at least 1")?;
    let started = Instant::now();
    let mut report = Report::new("fourier")
        .param("mode", "roundtrip")
        .param("dims", dims)
        .param("trials", trials)
        .param("seed", seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut tuple_ok, mut nf_ok, mut decorated_ok) = (0, 0, 0);
    for _ in 0..trials {
        let (t, nf) = random_tuple(&mut rng, dims);
        let (once, tw) = fourier_tuple(&t, HalfTwist::ZERO);
        let (twice, _) = fourier_tuple(&once, tw);
        if decompose(&twice).map_err(CliError::internal)? == decompose(&t).map_err(CliError::internal)? {
            tuple_ok += 1;
        }
        if fourier(&fourier(&nf).map_err(CliError::internal)?).map_err(CliError::internal)? == nf {
            nf_ok += 1;
        }
        let decorated = random_normal_form(&mut rng, dims, true);
        if fourier(&fourier(&decorated).map_err(CliError::internal)?).map_err(CliError::internal)? == decorated {
            decorated_ok += 1;
        }
    }
    report.push(Check::compare("involution on decorated normal forms", trials, decorated_ok));
    report.push(Check::compare("involution on normal forms", trials, nf_ok));
    report.push(Check::compare("involution on tuples", trials, tuple_ok));
    Ok(report.finish(started))
}

/// The normal form of a tuple, and a re-synthesis check: the catalog tuple of
/// the normal form has the same dimensions and the same ranks of all
/// alternating `can`/`var` words, which determine the isomorphism class.
pub fn decompose_input(json: &str) -> Result<Report, CliError> {
    let started = Instant::now();
    let t = parse_tuple(json)?;
    let mut report = Report::new("decompose");
    let nf = decompose(&t).map_err(CliError::internal)?;
    let rebuilt = synthesize(&nf).map_err(CliError::internal)?;
    let len = t.total_dim() + 1;
    let ranks = |x: &MonodromicTuple| (x.word_ranks(Vertex::Psi, len), x.word_ranks(Vertex::Phi, len));
    report.push(Check::compare(
        "resynthesis dimensions",
        (t.psi_dim(), t.phi_dim()),
        (rebuilt.psi_dim(), rebuilt.phi_dim()),
    ));
    report.push(Check::compare("resynthesis word ranks", ranks(&t), ranks(&rebuilt)));
    report.set_output(json!({ "normal_form": nf_output(&nf) }));
    Ok(report.finish(started))
}

fn ginzburg_reference(n: usize, adams_cutoff: u32) -> Result<BidegreeTable, CliError> {
    let g = construct_ginzburg(n).map_err(CliError::internal)?;
    Ok(g.cohomology_table(adams_cutoff).relabel(|c, a| (c, -a)))
}

/// The closed-form endomorphism table of the chosen plumbing, with its
/// structural checks and its cross-check against the quiver side: the
/// Ginzburg dga cohomology (core) or the `L_Γ` path counts (relcore).
pub fn endo(n: usize, variant: EndoVariant, a_cutoff: i64, b_cutoff: i64) -> Result<Report, CliError> {
    require(n >= 1, "--n must be at least 1")?;
    require(a_cutoff >= 0 && b_cutoff >= 0, "cutoffs must be non-negative")?;
    let started = Instant::now();
    let mut report = Report::new("endo")
        .param("n", n)
        .param("variant", variant)
        .param("a_cutoff", a_cutoff)
        .param("b_cutoff", b_cutoff);
    let table = endo_table(n, variant, a_cutoff, b_cutoff);
    match variant {
        EndoVariant::Core => {
            // The Ginzburg side is complete for 0 ≤ b ≤ b_cutoff.
            let window = |t: &BidegreeTable| t.filter(|a, b| a.abs() <= a_cutoff && (0..=b_cutoff).contains(&b));
            let reference = window(&ginzburg_reference(n, b_cutoff as u32)?);
            let formula = window(&table);
            report.push(Check::compare("ginzburg cohomology", &reference, &formula));
            let off: Vec<(i64, i64)> = table
                .iter()
                .map(|(k, _)| k)
                .filter(|&(a, b)| a < 0 || b < 0 || (b == 0 && a > 0) || (a == 0 && b > 0))
                .collect();
            report.push(Check::compare("vanishing pattern", Vec::<(i64, i64)>::new(), off));
            report.push(Check::compare("origin", n, table.get(0, 0)));
        }
        EndoVariant::Relcore => {
            let off: Vec<(i64, i64)> = table.iter().map(|(k, _)| k).filter(|&(a, b)| a != b).collect();
            report.push(Check::compare("support on k = 0", Vec::<(i64, i64)>::new(), off));
            let totals = |i: usize, j: usize| -> usize {
                (-b_cutoff..=b_cutoff).map(|s| endo_dim_relcore(n, i, j, 0, s)).sum()
            };
            let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
            let formula: Vec<usize> = pairs.iter().map(|&(i, j)| totals(i, j)).collect();
            let mins: Vec<usize> = pairs.iter().map(|&(i, j)| i.min(j)).collect();
            report.push(Check::compare("pair totals are min(i, j)", &mins, &formula));
            let paths = lgamma_path_totals(n, &pairs)?;
            report.push(Check::compare("pair totals match L paths", &paths, &formula));
        }
    }
    report.set_output(json!({ "n": n, "variant": variant, "table": table }));
    Ok(report.finish(started))
}

/// `Σ_k dim e_j L_Γ^k e_i` per pair; `L_Γ` of one vertex is the ground field.
fn lgamma_path_totals(n: usize, pairs: &[(usize, usize)]) -> Result<Vec<usize>, CliError> {
    if n == 1 {
        return Ok(vec![1]);
    }
    let top = 2 * n as u32;
    let basis = construct_lgamma(n).map_err(CliError::internal)?.basis(top).map_err(CliError::internal)?;
    let q = basis.quiver();
    pairs
        .iter()
        .map(|&(i, j)| {
            let (vi, vj) = (q.vertex(i).map_err(CliError::internal)?, q.vertex(j).map_err(CliError::internal)?);
            Ok((0..=top as i64).map(|k| basis.dim(vi, vj, Bidegree::new(k, k))).sum())
        })
        .collect()
}

/// The algebras the `koszul` command knows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraName {
    Agamma,
    Lgamma,
    Mgamma,
}

fn diagonal_dims(alg: &PresentedAlgebra, cutoff: u32) -> Result<BidegreeTable, CliError> {
    let basis = alg.basis(cutoff).map_err(CliError::internal)?;
    let mut t = BidegreeTable::new();
    for k in 0..=cutoff as i64 {
        t.add(k, k, basis.graded_dim(Bidegree::new(k, k)));
    }
    Ok(t)
}

/// The Koszul-duality suite for one algebra.
///
/// * `lgamma`: classical Koszulity, `Ext(L) ≅ M` by weight, exactness of the
///   explicit resolution of `k`, and the closed form of `dim L^i`.
/// * `mgamma`: classical Koszulity and `Ext(M) ≅ L` by weight.
/// * `agamma`: `Ext(A_Γ)` equals the Ginzburg cohomology table and `A_Γ` is
///   concentrated in degrees `(k, −k)`, `0 ≤ k ≤ 2`.
pub fn koszul(algebra: AlgebraName, n: usize, cutoff: u32) -> Result<Report, CliError> {
    match algebra {
        AlgebraName::Agamma => require(n >= 1, "--n must be at least 1")?,
        AlgebraName::Lgamma | AlgebraName::Mgamma => require(n >= 2, "L_Γ and M_Γ need --n at least 2")?,
    }
    let started = Instant::now();
    let mut report = Report::new("koszul")
        .param("algebra", algebra)
        .param("n", n)
        .param("cutoff", cutoff);
    let steps = cutoff as usize;
    match algebra {
        AlgebraName::Lgamma | AlgebraName::Mgamma => {
            let l = construct_lgamma(n).map_err(CliError::internal)?;
            let m = construct_mgamma(n).map_err(CliError::internal)?;
            let (alg, dual) = if algebra == AlgebraName::Lgamma { (&l, &m) } else { (&m, &l) };
            let koszul = koszul_check(alg, KoszulMode::Classical, cutoff).map_err(CliError::internal)?;
            report.push(Check::holds("classical koszul", koszul));
            let ext = ext_table(alg, steps, cutoff).map_err(CliError::internal)?.by_weight();
            report.push(Check::compare("ext equals dual dims", diagonal_dims(dual, cutoff)?, ext));
            if algebra == AlgebraName::Lgamma {
                report.push(Check::holds(
                    "resolution of k is exact",
                    verify_lgamma_resolution(n).map_err(CliError::internal)?,
                ));
                let closed: BidegreeTable =
                    (0..=cutoff as i64).map(|k| ((k, k), lgamma_dim_closed(n, k as usize))).collect();
                report.push(Check::compare("closed form dims", closed, diagonal_dims(&l, cutoff)?));
            }
        }
        AlgebraName::Agamma => {
            let a = construct_agamma(n).map_err(CliError::internal)?;
            let ext = ext_kk_table(&a, cutoff).map_err(CliError::internal)?.relabel(|h, p| (h, -p));
            let g = construct_ginzburg(n).map_err(CliError::internal)?.cohomology_table(cutoff);
            report.push(Check::compare("ext equals ginzburg cohomology", &g, &ext));
            let basis = a.basis(cutoff).map_err(CliError::internal)?;
            let stray: Vec<String> = basis
                .graded_dims()
                .into_iter()
                .filter(|(d, _)| d.coh != -d.adams || !(0..=2).contains(&d.coh))
                .map(|(d, _)| d.to_string())
                .collect();
            report.push(Check::compare("concentrated in degrees (k, -k), k <= 2", Vec::<String>::new(), stray));
            report.set_output(json!({ "ext": ext }));
        }
    }
    Ok(report.finish(started))
}

/// The bar cohomology table of `H*(ℙⁿ)` against the wrapping sequence.
pub fn bar(pn: usize, degree_cutoff: u32) -> Result<Report, CliError> {
    require(pn >= 1, "--pn must be at least 1")?;
    let started = Instant::now();
    let mut report = Report::new("bar").param("pn", pn).param("degree_cutoff", degree_cutoff);
    if (degree_cutoff as usize) < 2 * pn {
        report.warn(format!(
            "degree cutoff {degree_cutoff} is below 2n = {}: only the classes (0,0) and (1,2) are compared",
            2 * pn
        ));
    }
    let alg = cohomology_ring_pn(pn).map_err(CliError::internal)?;
    let complex = BarComplex::new(&alg, degree_cutoff);
    report.push(Check::holds("bar differential squares to zero", complex.check_d_squared()));
    let table = bar_cohomology_table(&alg, degree_cutoff);
    let expected: BidegreeTable = wrapping_weight_sequence(pn, 2 * degree_cutoff as usize + 2)
        .into_iter()
        .filter(|&(d, _)| d <= degree_cutoff as i64)
        .map(|p| (p, 1))
        .collect();
    report.push(Check::compare("matches wrapping sequence", &expected, &table));
    report.set_output(json!({ "table": table }));
    Ok(report.finish(started))
}
