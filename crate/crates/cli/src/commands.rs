use braidcalc::crossprod::{
    bosonize_qt, check_admissible, check_inner_quasitriangular, check_projection, check_quasitriangular,
    radford_majid_decompose, smash_bialgebra,
};
use braidcalc::diffcalc::{build_exterior_calculus, check_exterior_calculus, check_first_order};
use braidcalc::exactla::rank;
use braidcalc::gradedcalc::{antisymmetrizer, exterior_hopf};
use braidcalc::hopf::check_hopf;
use braidcalc::hopfbimod::{check_hopf_bimodule, invariants};
use braidcalc::io::{self, AlgebraFile, Loader, ObjectFile, QtFile, Ref, YdFile};
use braidcalc::yd::{check_braid_relation, check_crossed, yd_braiding, yd_braiding_inverse};
use braidcalc::{Error, Field, FiniteHopfAlgebra, LinMap, Report, Result};

use crate::output::{Item, Output};
use crate::Verb;

const EXTERIOR_DEFAULT_DEGREE: usize = 4;
const CALCULUS_DEFAULT_DEGREE: usize = 3;

/// Load inputs and run one verb. `Err` means the input could not be read;
/// failures of the computation itself are recorded in the output.
pub fn run(verb: &Verb, field: Field, max_degree: Option<usize>) -> Result<Output> {
    let loader = Loader::new("", field);
    let mut out = Output::new(verb.name());
    let res = match verb {
        Verb::CheckHopf { algebra } => check_hopf_cmd(&loader, algebra, &mut out)?,
        Verb::CheckYd { module } => check_yd(&loader, module, &mut out)?,
        Verb::CheckBimodule { bimodule } => check_bimodule(&loader, bimodule, &mut out)?,
        Verb::Braid { first, second } => braid(&loader, first, second.as_deref(), &mut out)?,
        Verb::Smash { object } => smash(&loader, object, &mut out)?,
        Verb::Bosonize { qt, inner } => bosonize(&loader, qt, inner, &mut out)?,
        Verb::Decompose { projection } => decompose(&loader, projection, &mut out)?,
        Verb::Exterior { braiding } => {
            exterior(&loader, braiding, max_degree.unwrap_or(EXTERIOR_DEFAULT_DEGREE), &mut out)?
        }
        Verb::Calculus { calculus } => {
            calculus_cmd(&loader, calculus, max_degree.unwrap_or(CALCULUS_DEFAULT_DEGREE), &mut out)?
        }
    };
    if let Err(e) = res {
        out.fail(e);
    }
    Ok(out.finish())
}

fn name<T>(path: &str) -> Ref<T> {
    Ref::Name(path.to_string())
}

/// The base algebra's own report, so broken inputs are visible up front.
fn base_report(out: &mut Output, h: &FiniteHopfAlgebra) -> bool {
    out.report(check_hopf(h))
}

fn check_hopf_cmd(l: &Loader, arg: &str, out: &mut Output) -> Result<Result<()>> {
    let h = l.algebra(&name(arg))?;
    out.item(Item::fact("name", h.name()));
    out.item(Item::fact("dimension", h.dim()));
    out.item(Item::fact("field", serde_json::to_string(&h.field().spec()).expect("field spec")));
    let mut r = check_hopf(&h);
    if !h.has_antipode() {
        // no antipode supplied: say whether one exists
        let solved = h.solve_antipode();
        let note = match &solved {
            Ok(_) => "not supplied; solved from the convolution equation".to_string(),
            Err(e) => format!("not supplied; {e}"),
        };
        r.flag("antipode exists", solved.is_ok(), Some(note));
    }
    out.report(r);
    Ok(Ok(()))
}

fn check_yd(l: &Loader, arg: &str, out: &mut Output) -> Result<Result<()>> {
    let (h, x) = l.yd(&name(arg))?;
    Ok((|| {
        base_report(out, &h);
        out.item(Item::fact("dimension", x.dim));
        out.report(check_crossed(&h, &x)?);
        Ok(())
    })())
}

fn check_bimodule(l: &Loader, arg: &str, out: &mut Output) -> Result<Result<()>> {
    let (h, x) = l.bimodule(&name(arg))?;
    Ok((|| {
        base_report(out, &h);
        out.item(Item::fact("dimension", x.dim));
        if out.report(check_hopf_bimodule(&h, &x)?) {
            let (y, _) = invariants(&h, &x)?;
            out.item(Item::fact("invariant dimension", y.dim));
            out.item(Item::definition("invariant crossed module", &YdFile::from_module(&h, &y)));
        }
        Ok(())
    })())
}

fn braid(l: &Loader, first: &str, second: Option<&str>, out: &mut Output) -> Result<Result<()>> {
    let (h, x) = l.yd(&name(first))?;
    let mut modules = vec![x];
    if let Some(path) = second {
        let (h2, y) = l.yd(&name(path))?;
        if h2 != h {
            return Err(Error::Parse("the two modules live over different algebras".into()));
        }
        modules.push(y);
    }
    Ok((|| {
        base_report(out, &h);
        for m in &modules {
            let mut r = check_crossed(&h, m)?;
            r.subject = format!("crossed module of dimension {}", m.dim);
            if !out.report(r) {
                return Ok(());
            }
        }
        let (x, y) = (&modules[0], modules.last().expect("one module"));
        let psi = yd_braiding(&h, x, y)?;
        let inv = yd_braiding_inverse(&h, x, y)?;
        let mut r = Report::new("braiding");
        r.eq_maps("inverse after braiding", &inv.compose(&psi), &LinMap::identity(x.dim * y.dim));
        r.eq_maps("braiding after inverse", &psi.compose(&inv), &LinMap::identity(x.dim * y.dim));
        out.report(r);
        let n = modules.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let mut r = check_braid_relation(&h, &modules[a], &modules[b], &modules[c])?;
                    if n > 1 {
                        r.subject = format!("braid relation ({}, {}, {})", a + 1, b + 1, c + 1);
                    }
                    out.report(r);
                }
            }
        }
        out.item(Item::matrix("braiding", &psi, h.field()));
        out.item(Item::matrix("inverse braiding", &inv, h.field()));
        Ok(())
    })())
}

fn smash(l: &Loader, arg: &str, out: &mut Output) -> Result<Result<()>> {
    let (h, x) = l.object(&name(arg))?;
    Ok((|| {
        base_report(out, &h);
        if !out.report(check_admissible(&h, &x)?) {
            return Ok(());
        }
        let s = smash_bialgebra(&h, &x)?.with_name(format!("{} smash product", h.name()));
        out.item(Item::fact("dimension", s.dim()));
        out.report(check_hopf(&s));
        let file = AlgebraFile::from_algebra(&s);
        out.artifact = Some(io::to_json(&file));
        out.item(Item::definition("smash bialgebra", &file));
        Ok(())
    })())
}

fn bosonize(l: &Loader, qt: &str, inner: &str, out: &mut Output) -> Result<Result<()>> {
    let qa = l.qt(&name(qt))?;
    let (h, qb) = l.inner_qt(&name(inner))?;
    if h != qa.a {
        return Err(Error::Parse("the object lives over a different algebra than the R-matrix".into()));
    }
    Ok((|| {
        base_report(out, &h);
        if !out.report(check_quasitriangular(&qa)?) {
            return Ok(());
        }
        if !out.report(check_inner_quasitriangular(&qa, &qb)?) {
            return Ok(());
        }
        let q = bosonize_qt(&qa, &qb)?;
        let mut r = check_quasitriangular(&q)?;
        r.subject = "bosonization".into();
        out.report(r);
        out.item(Item::fact("dimension", q.a.dim()));
        let file = QtFile::from_qt(&q);
        out.artifact = Some(io::to_json(&file));
        out.item(Item::definition("quasitriangular bosonization", &file));
        Ok(())
    })())
}

fn decompose(l: &Loader, arg: &str, out: &mut Output) -> Result<Result<()>> {
    let p = l.projection(&name(arg))?;
    Ok((|| {
        base_report(out, &p.b1);
        out.report(check_hopf(&p.b2));
        if !out.report(check_projection(&p)) {
            return Ok(());
        }
        let d = radford_majid_decompose(&p)?;
        let mut r = check_admissible(&p.b1, &d.x)?;
        r.subject = "invariant object".into();
        out.report(r);
        out.item(Item::fact("invariant dimension", d.x.dim));
        let file = ObjectFile::from_object(&p.b1, &d.x);
        out.artifact = Some(io::to_json(&file));
        out.item(Item::definition("admissible object", &file));
        out.item(Item::matrix("isomorphism from the smash bialgebra", &d.iso, p.b1.field()));
        Ok(())
    })())
}

fn exterior(l: &Loader, arg: &str, max_degree: usize, out: &mut Output) -> Result<Result<()>> {
    let (x, _field) = l.braided(&name(arg))?;
    Ok((|| {
        out.item(Item::fact("dimension", x.dim));
        out.item(Item::fact("max degree", max_degree));
        if !out.report(x.check()) {
            return Ok(());
        }
        let ranks = (0..=max_degree)
            .map(|j| antisymmetrizer(&x, j).map(|a| rank(&a)))
            .collect::<Result<Vec<_>>>()?;
        let e = exterior_hopf(&x, max_degree)?;
        let coims: Vec<usize> = e.proj.iter().map(LinMap::cod).collect();
        let mut r = Report::new("exterior algebra");
        r.flag("rank of A_j equals coimage dimension", ranks == coims, None);
        r.flag("degreewise morphism and descent checks", true, Some("verified during construction".into()));
        out.report(r);
        let rows = ranks.iter().zip(&coims).map(|(a, b)| vec![*a, *b]).collect();
        out.item(Item::Table { title: "dimensions".into(), columns: vec!["rank A_j".into(), "coimage".into()], rows });
        Ok(())
    })())
}

fn calculus_cmd(l: &Loader, arg: &str, max_degree: usize, out: &mut Output) -> Result<Result<()>> {
    let c = l.calculus(&name(arg))?;
    Ok((|| {
        base_report(out, &c.h);
        out.item(Item::fact("one-forms", c.x.dim));
        out.item(Item::fact("max degree", max_degree));
        let mut r = check_first_order(&c)?;
        r.subject = "first-order calculus".into();
        if !out.report(r) {
            return Ok(());
        }
        let e = build_exterior_calculus(&c, max_degree)?;
        out.report(check_exterior_calculus(&e, &c));
        out.item(Item::fact("invariant one-forms", e.invariants.dim));
        let rows = e.dims().iter().zip(&e.exterior.dims).map(|(a, b)| vec![*a, *b]).collect();
        out.item(Item::Table { title: "dimensions".into(), columns: vec!["forms".into(), "invariant forms".into()], rows });
        for (j, d) in e.diffs.iter().enumerate() {
            out.item(Item::matrix(format!("d_{j}"), d, c.h.field()));
        }
        Ok(())
    })())
}
