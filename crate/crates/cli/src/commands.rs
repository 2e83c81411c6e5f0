use clap::{Subcommand, ValueEnum};
use num_integer::Integer;
use serde_json::json;

use surgeryforge::families::{
    alt_gofk_pipeline, family_fillings, figure_eight_sister_triple, gofklens_census,
    optsurg_catalog, orientation_consistency, verify_three_filling_intersections, wsl_index_orders,
    Member,
};
use surgeryforge::lens::{from_surgery, homeo_oriented, homeo_unoriented, lens, mirror};
use surgeryforge::normseq::{
    gofk_exponent_sums, gofk_patterns_of, parse_raw, reduce, riemenschneider_dual,
    table_discrepancies, to_lens,
};
use surgeryforge::pentangle::{
    factors_through_p3, is_nonhyperbolic, simplifies, symmetry, two_bridge_necessary,
    verify_fillingsimplifies, P5Filling, Symmetry, XFill,
};
use surgeryforge::rationals::{cf_eval, cf_expand_norm, cf_solve_tail, mobius, Mobius};
use surgeryforge::simpleknot::{
    equivalent, euler_char, genus_primitive, knots_with_genus, star_solutions, SimpleKnot,
};
use surgeryforge::sweep::Exec;
use surgeryforge::tangle::MontesinosLink;
use surgeryforge::{ContFrac, Error, ExtRational, LensSpace, Result};

use crate::Report;

#[derive(Subcommand, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum Command {
    /// Lens-space normal forms and homeomorphism tests.
    #[command(subcommand)]
    Lens(LensCmd),
    /// Continued fractions with the `a - 1/x` recursion.
    #[command(subcommand)]
    Cf(CfCmd),
    /// Norm sequences, duals and genus one fibered knot exponent sums.
    #[command(subcommand)]
    Normseq(NormseqCmd),
    /// Simple knots K(p,q,k) in lens spaces.
    #[command(subcommand)]
    Simpleknot(SimpleknotCmd),
    /// Rational tangles and Montesinos links.
    #[command(subcommand)]
    Tangle(TangleCmd),
    /// Fillings of the pentangle and the simplification sweep.
    #[command(subcommand)]
    Pentangle(PentangleCmd),
    /// Magic-manifold filling families and the derived checks.
    #[command(subcommand)]
    Families(FamiliesCmd),
}

#[derive(Subcommand, Debug)]
pub enum LensCmd {
    /// L(p,q) in normal form.
    #[command(allow_negative_numbers = true)]
    Normalize { p: i64, q: i64 },
    /// Compare L(p1,q1) and L(p2,q2).
    #[command(allow_negative_numbers = true)]
    Homeo {
        p1: i64,
        q1: i64,
        p2: i64,
        q2: i64,
        /// Require an orientation-preserving homeomorphism.
        #[arg(long)]
        oriented: bool,
    },
    #[command(allow_negative_numbers = true)]
    Mirror { p: i64, q: i64 },
    /// Surgery on the unknot with slope r.
    #[command(allow_negative_numbers = true)]
    Surgery {
        #[arg(allow_hyphen_values = true)]
        r: ExtRational,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum MapName {
    Reciprocal,
    Negate,
    F,
    G,
    Shift,
}

#[derive(Subcommand, Debug)]
pub enum CfCmd {
    /// Evaluate "[a1,...,an]"; the last entry may be rational.
    Eval { cf: ContFrac },
    /// Expansion with every coefficient at least 2.
    Expand {
        #[arg(allow_hyphen_values = true)]
        #[arg(allow_hyphen_values = true)]
        x: ExtRational,
    },
    /// r/s with [prefix, r/s] = [0, j].
    #[command(allow_negative_numbers = true)]
    SolveTail { prefix: ContFrac, j: i64 },
    #[command(allow_negative_numbers = true)]
    Mobius {
        #[arg(allow_hyphen_values = true)]
        x: ExtRational,
        #[arg(value_enum)]
        map: MapName,
        /// Shift amount for `shift`.
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        by: i64,
    },
}

#[derive(Subcommand, Debug)]
pub enum NormseqCmd {
    /// Reduce "(a1,...,an)" with 2^[t] shorthand.
    #[command(allow_negative_numbers = true)]
    Reduce { seq: String },
    /// The Riemenschneider dual.
    Dual { seq: String },
    /// Exponent sums and table patterns.
    Sums { seq: String },
    /// Cells where the exponent-sum table disagrees with the chart.
    Table {
        #[arg(long, default_value_t = 8)]
        bound: i64,
    },
}

#[derive(Subcommand, Debug)]
pub enum SimpleknotCmd {
    /// Euler characteristic and genus.
    #[command(allow_negative_numbers = true)]
    Chi { p: i64, q: i64, k: i64 },
    /// Solutions of k² + ε(k+1) ≡ 0 (mod p); both signs unless given.
    #[command(allow_negative_numbers = true)]
    Star {
        p: i64,
        #[arg(long, allow_negative_numbers = true)]
        eps: Option<i64>,
    },
    /// Primitive simple knots of genus g in a lens space such as "L(50,41)".
    GenusSearch { lens: LensSpace, g: i64 },
    #[command(allow_negative_numbers = true)]
    Equivalent { p: i64, q1: i64, k1: i64, q2: i64, k2: i64 },
}

#[derive(Subcommand, Debug)]
pub enum TangleCmd {
    /// Two-bridge test for "Q(a/b,c/d,...)".
    TwoBridge { link: MontesinosLink },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SymName {
    Lr,
    Tb,
    Fb,
    Rot3,
    Mirror,
}

#[derive(Subcommand, Debug)]
pub enum PentangleCmd {
    /// Sweep all slope tuples up to a height bound.
    Verify {
        #[arg(long, default_value_t = 2)]
        bound: i64,
    },
    /// Classify one filling (NW, NE, SW, SE).
    #[command(allow_negative_numbers = true)]
    Check {
        #[arg(allow_hyphen_values = true)]
        nw: ExtRational,
        #[arg(allow_hyphen_values = true)]
        ne: ExtRational,
        #[arg(allow_hyphen_values = true)]
        sw: ExtRational,
        #[arg(allow_hyphen_values = true)]
        se: ExtRational,
    },
    /// Apply a symmetry to (NW, NE, SW, SE[, x]).
    #[command(allow_negative_numbers = true)]
    Symmetry {
        #[arg(value_enum)]
        which: SymName,
        #[arg(allow_hyphen_values = true)]
        nw: ExtRational,
        #[arg(allow_hyphen_values = true)]
        ne: ExtRational,
        #[arg(allow_hyphen_values = true)]
        sw: ExtRational,
        #[arg(allow_hyphen_values = true)]
        se: ExtRational,
        x: Option<ExtRational>,
    },
}

#[derive(Subcommand, Debug)]
pub enum FamiliesCmd {
    /// Lens fillings of a member: `A m n`, `B p/q`, `X0 m n`, `X1 m p/q`, `X2 m p/q`, `X3 m n`.
    #[command(allow_negative_numbers = true)]
    Eval {
        family: String,
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: Option<String>,
    },
    /// Genus one fibered lens-space census.
    Census {
        #[arg(long, default_value_t = 5)]
        tmax: i64,
        #[arg(long, default_value_t = 6)]
        seqmax: i64,
    },
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Surgery-dual pair of a once-punctured-torus family (1..=6).
    #[command(allow_negative_numbers = true)]
    Optsurg { family: u8, k: i64, l: Option<i64> },
    /// The three lens fillings of W(-5, ·) from four families.
    Triple,
    /// Both index orders of A for the Whitehead sister link.
    #[command(allow_negative_numbers = true)]
    Wsl { p: i64 },
}

#[derive(Subcommand, Debug)]
pub enum VerifyCmd {
    Intersections {
        #[arg(long, default_value_t = 8)]
        bound: i64,
    },
    Orientation {
        #[arg(long, default_value_t = 5)]
        bound: i64,
    },
    AltGofk {
        #[arg(long, default_value_t = 6)]
        tmax: i64,
    },
}

fn exec(jobs: Option<usize>) -> Exec {
    if jobs == Some(1) {
        Exec::Sequential
    } else {
        Exec::default()
    }
}

fn seq(s: &str) -> Result<surgeryforge::NormSeq> {
    Ok(reduce(&parse_raw(s)?))
}

fn int_param(s: &str) -> Result<i64> {
    s.parse().map_err(|_| Error::Parse {
        what: "integer",
        input: s.to_string(),
    })
}

fn member(family: &str, params: &[String]) -> Result<Member> {
    let need = |n: usize| -> Result<()> {
        if params.len() == n {
            Ok(())
        } else {
            Err(Error::Usage(format!("{family} takes {n} parameter(s)")))
        }
    };
    let f = family.to_ascii_uppercase();
    match f.as_str() {
        "A" | "X0" | "X3" => {
            need(2)?;
            let (m, n) = (int_param(&params[0])?, int_param(&params[1])?);
            Ok(match f.as_str() {
                "A" => Member::A { m, n },
                "X0" => Member::X0 { m, n },
                _ => Member::X3 { m, n },
            })
        }
        "X1" | "X2" => {
            need(2)?;
            let m = int_param(&params[0])?;
            let r: ExtRational = params[1].parse()?;
            Ok(if f == "X1" { Member::X1 { m, r } } else { Member::X2 { m, r } })
        }
        "B" => {
            need(1)?;
            Ok(Member::B { r: params[0].parse()? })
        }
        _ => Err(Error::Usage(format!("unknown family {family}; expected A, B, X0..X3"))),
    }
}

pub fn execute(cmd: &Command, jobs: Option<usize>) -> Result<Report> {
    match cmd {
        Command::Lens(c) => lens_cmd(c),
        Command::Cf(c) => cf_cmd(c),
        Command::Normseq(c) => normseq_cmd(c),
        Command::Simpleknot(c) => simpleknot_cmd(c),
        Command::Tangle(TangleCmd::TwoBridge { link }) => Ok(Report::new("tangle two-bridge")
            .param("link", link)
            .result(json!({
                "link": link,
                "two_bridge": link.is_two_bridge(),
                "fingerprint": { "fractions": link.fingerprint().0, "integer": link.fingerprint().1.to_string() },
            }))),
        Command::Pentangle(c) => pentangle_cmd(c, jobs),
        Command::Families(c) => families_cmd(c, jobs),
    }
}

fn lens_cmd(c: &LensCmd) -> Result<Report> {
    Ok(match c {
        LensCmd::Normalize { p, q } => {
            let l = lens(*p, *q)?;
            Report::new("lens normalize").param("p", p).param("q", q).result(json!({ "lens": l }))
        }
        LensCmd::Homeo { p1, q1, p2, q2, oriented } => {
            let (a, b) = (lens(*p1, *q1)?, lens(*p2, *q2)?);
            let (o, u) = (homeo_oriented(&a, &b), homeo_unoriented(&a, &b));
            Report::new("lens homeo")
                .param("first", &a)
                .param("second", &b)
                .param("oriented", oriented)
                .result(json!({
                    "homeomorphic": if *oriented { o } else { u },
                    "oriented": o,
                    "unoriented": u,
                }))
        }
        LensCmd::Mirror { p, q } => {
            let l = lens(*p, *q)?;
            Report::new("lens mirror").param("lens", &l).result(json!({ "mirror": mirror(&l) }))
        }
        LensCmd::Surgery { r } => Report::new("lens surgery")
            .param("slope", r)
            .result(json!({ "lens": from_surgery(r) })),
    })
}

fn cf_cmd(c: &CfCmd) -> Result<Report> {
    Ok(match c {
        CfCmd::Eval { cf } => Report::new("cf eval")
            .param("cf", cf.to_string())
            .result(json!({ "value": cf_eval(cf) })),
        CfCmd::Expand { x } => {
            let e: Vec<String> = cf_expand_norm(x)?.iter().map(ToString::to_string).collect();
            Report::new("cf expand").param("x", x).result(json!({ "coefficients": e }))
        }
        CfCmd::SolveTail { prefix, j } => {
            if prefix.tail.is_some() {
                return Err(Error::Usage("the prefix must be integral".into()));
            }
            let r = cf_solve_tail(&prefix.coeffs, &(*j).into());
            Report::new("cf solve-tail")
                .param("prefix", prefix.to_string())
                .param("j", j)
                .result(json!({ "tail": r }))
        }
        CfCmd::Mobius { x, map, by } => {
            let m = match map {
                MapName::Reciprocal => Mobius::Reciprocal,
                MapName::Negate => Mobius::Negate,
                MapName::F => Mobius::F,
                MapName::G => Mobius::G,
                MapName::Shift => Mobius::Shift((*by).into()),
            };
            Report::new("cf mobius")
                .param("x", x)
                .param("map", format!("{map:?}").to_lowercase())
                .param("by", by)
                .result(json!({ "value": mobius(x, &m) }))
        }
    })
}

fn normseq_cmd(c: &NormseqCmd) -> Result<Report> {
    Ok(match c {
        NormseqCmd::Reduce { seq: s } => {
            let r = seq(s)?;
            Report::new("normseq reduce")
                .param("input", s)
                .result(json!({ "sequence": r, "lens": to_lens(&r), "kind": r.kind() }))
        }
        NormseqCmd::Dual { seq: s } => {
            let a = seq(s)?;
            let b = riemenschneider_dual(&a)?;
            Report::new("normseq dual").param("input", s).result(json!({
                "sequence": a, "lens": to_lens(&a), "dual": b, "dual_lens": to_lens(&b),
            }))
        }
        NormseqCmd::Sums { seq: s } => {
            let a = seq(s)?;
            let patterns: Vec<_> = gofk_patterns_of(&a)
                .into_iter()
                .map(|(p, r, s)| json!({ "pattern": p, "r": r, "s": s }))
                .collect();
            Report::new("normseq sums").param("input", s).result(json!({
                "sequence": a,
                "lens": to_lens(&a),
                "exponent_sums": gofk_exponent_sums(&a),
                "patterns": patterns,
            }))
        }
        NormseqCmd::Table { bound } => {
            let mut r = Report::new("normseq table").param("bound", bound);
            for d in table_discrepancies(*bound) {
                r = r.result(d);
            }
            r
        }
    })
}

fn knot_json(kn: &SimpleKnot) -> serde_json::Value {
    json!({
        "p": kn.p,
        "q": kn.q,
        "k": kn.k,
        "chi": euler_char(kn),
        "genus": genus_primitive(kn).ok(),
        "order": kn.p / kn.p.gcd(&kn.k),
    })
}

fn simpleknot_cmd(c: &SimpleknotCmd) -> Result<Report> {
    Ok(match c {
        SimpleknotCmd::Chi { p, q, k } => {
            let kn = SimpleKnot::new(*p, *q, *k)?;
            Report::new("simpleknot chi")
                .param("p", p)
                .param("q", q)
                .param("k", k)
                .result(knot_json(&kn))
        }
        SimpleknotCmd::Star { p, eps } => {
            if *p < 1 {
                return Err(Error::Usage("p must be positive".into()));
            }
            let signs = match eps {
                Some(e) if *e == 1 || *e == -1 => vec![*e],
                Some(e) => return Err(Error::Usage(format!("eps must be +1 or -1, got {e}"))),
                None => vec![1, -1],
            };
            let mut r = Report::new("simpleknot star").param("p", p).param("eps", eps);
            for e in signs {
                r = r.result(star_solutions(*p, e));
            }
            r
        }
        SimpleknotCmd::GenusSearch { lens: l, g } => {
            let mut r = Report::new("simpleknot genus-search").param("lens", l).param("g", g);
            for kn in knots_with_genus(l, *g) {
                r = r.result(knot_json(&kn));
            }
            r
        }
        SimpleknotCmd::Equivalent { p, q1, k1, q2, k2 } => {
            let (a, b) = (SimpleKnot::new(*p, *q1, *k1)?, SimpleKnot::new(*p, *q2, *k2)?);
            Report::new("simpleknot equivalent")
                .param("first", a.to_string())
                .param("second", b.to_string())
                .result(json!({ "equivalent": equivalent(&a, &b) }))
        }
    })
}

fn pentangle_cmd(c: &PentangleCmd, jobs: Option<usize>) -> Result<Report> {
    Ok(match c {
        PentangleCmd::Verify { bound } => {
            if *bound < 1 {
                return Err(Error::Usage("bound must be positive".into()));
            }
            Report::new("pentangle verify")
                .param("bound", bound)
                .sweep(verify_fillingsimplifies(*bound, exec(jobs)))
        }
        PentangleCmd::Check { nw, ne, sw, se } => {
            let f = P5Filling::new(nw.clone(), ne.clone(), sw.clone(), se.clone());
            let nec: Vec<_> = [XFill::Zero, XFill::Inf, XFill::MinusOne]
                .into_iter()
                .map(|x| json!({ "x": x.value(), "two_bridge_necessary": two_bridge_necessary(&f, x) }))
                .collect();
            Report::new("pentangle check").param("filling", f.to_string()).result(json!({
                "nonhyperbolic": is_nonhyperbolic(&f),
                "factors_through": format!("{:?}", factors_through_p3(&f)),
                "simplifies": simplifies(&f),
                "fillings": nec,
            }))
        }
        PentangleCmd::Symmetry { which, nw, ne, sw, se, x } => {
            let mut f = P5Filling::new(nw.clone(), ne.clone(), sw.clone(), se.clone());
            if let Some(x) = x {
                f = f.with_x(x.clone());
            }
            let s = match which {
                SymName::Lr => Symmetry::SwapLR,
                SymName::Tb => Symmetry::SwapTB,
                SymName::Fb => Symmetry::SwapFB,
                SymName::Rot3 => Symmetry::Rot3,
                SymName::Mirror => Symmetry::Mirror,
            };
            Report::new("pentangle symmetry")
                .param("which", format!("{which:?}").to_lowercase())
                .param("filling", f.to_string())
                .result(json!({ "image": symmetry(&f, s).to_string() }))
        }
    })
}

fn families_cmd(c: &FamiliesCmd, jobs: Option<usize>) -> Result<Report> {
    Ok(match c {
        FamiliesCmd::Eval { family, first, second } => {
            let params: Vec<String> = std::iter::once(first.clone()).chain(second.clone()).collect();
            let m = member(family, &params)?;
            let mut r = Report::new("families eval").param("member", m.to_string());
            for f in family_fillings(&m)? {
                r = r.result(f);
            }
            r
        }
        FamiliesCmd::Census { tmax, seqmax } => {
            if *tmax < 1 || *seqmax < 1 {
                return Err(Error::Usage("bounds must be at least 1".into()));
            }
            let c = gofklens_census(*tmax, *seqmax, exec(jobs));
            let mut r = Report::new("families census").param("tmax", tmax).param("seqmax", seqmax);
            for m in &c.missing {
                r.counterexamples.push(json!({ "missing": m }));
            }
            for e in &c.extra {
                r.counterexamples.push(json!({ "extra": e }));
            }
            r.result(json!({
                "sequences_enumerated": c.sequences_enumerated,
                "entries": c.entries,
                "expected": c.expected,
                "small_rows": c.small_rows,
                "lens_spaces": c.lens_spaces,
            }))
        }
        FamiliesCmd::Verify(v) => match v {
            VerifyCmd::Intersections { bound } => {
                if *bound < 2 {
                    return Err(Error::Usage("bound must be at least 2".into()));
                }
                Report::new("families verify intersections")
                    .param("bound", bound)
                    .sweep(verify_three_filling_intersections(*bound, exec(jobs)))
            }
            VerifyCmd::Orientation { bound } => {
                if *bound < 2 {
                    return Err(Error::Usage("bound must be at least 2".into()));
                }
                Report::new("families verify orientation")
                    .param("bound", bound)
                    .sweep(orientation_consistency(*bound))
            }
            VerifyCmd::AltGofk { tmax } => Report::new("families verify alt-gofk")
                .param("tmax", tmax)
                .sweep(alt_gofk_pipeline(*tmax)),
        },
        FamiliesCmd::Optsurg { family, k, l } => {
            let (a, b) = optsurg_catalog(*family, *k, *l)?;
            Report::new("families optsurg")
                .param("family", family)
                .param("k", k)
                .param("l", l)
                .result(json!({ "descriptor": a.to_string(), "knot": a }))
                .result(json!({ "descriptor": b.to_string(), "knot": b }))
        }
        FamiliesCmd::Triple => {
            let t = figure_eight_sister_triple()?;
            let mut r = Report::new("families triple");
            if !t.consistent {
                r.counterexamples.push(json!(t.instances));
            }
            r.result(t)
        }
        FamiliesCmd::Wsl { p } => {
            let mut r = Report::new("families wsl").param("p", p);
            for (m, fills) in wsl_index_orders(*p) {
                r = r.result(match fills {
                    Ok(f) => json!({ "member": m.to_string(), "fillings": f }),
                    Err(e) => json!({ "member": m.to_string(), "error": e.to_string() }),
                });
            }
            r
        }
    })
}
