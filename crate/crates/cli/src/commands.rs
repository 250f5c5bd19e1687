use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use qgor_core::analysis::{self, Budgets, ParamSystem};
use qgor_core::homology::{self, ModulePresentation};
use qgor_core::invariants;
use qgor_core::{Field, Ideal, PolyRing, Polynomial, RingSpec};

use crate::report::{render_text, Envelope};
use crate::session::{AnyRing, ListKind, RingDecl, Session};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, clap::ValueEnum, Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Gb,
    Dim,
    Colon,
    Intersect,
    Saturate,
    Hilbert,
    Mu,
    Socle,
    Irreducible,
    LimitClosure,
    Sop,
    Resolve,
    Ext,
    Canonical,
    Depth,
    Qgcheck,
    Buchsbaum,
    Gcm,
    Deform,
    QuotientProbe,
    Corpus,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Gb => "gb",
            Command::Dim => "dim",
            Command::Colon => "colon",
            Command::Intersect => "intersect",
            Command::Saturate => "saturate",
            Command::Hilbert => "hilbert",
            Command::Mu => "mu",
            Command::Socle => "socle",
            Command::Irreducible => "irreducible",
            Command::LimitClosure => "limit-closure",
            Command::Sop => "sop",
            Command::Resolve => "resolve",
            Command::Ext => "ext",
            Command::Canonical => "canonical",
            Command::Depth => "depth",
            Command::Qgcheck => "qgcheck",
            Command::Buchsbaum => "buchsbaum",
            Command::Gcm => "gcm",
            Command::Deform => "deform",
            Command::QuotientProbe => "quotient-probe",
            Command::Corpus => "corpus",
        }
    }
}

/// Everything a command reads besides the session.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    pub ring: Option<String>,
    pub ideals: Vec<String>,
    pub seqs: Vec<String>,
    pub budgets: Budgets,
    /// Degree bound for `hilbert`.
    pub degree: u32,
    /// Ext index for `ext`.
    pub index: Option<usize>,
    /// Power `n` for `limit-closure`.
    pub power: u32,
    /// Number of quotients for `deform`.
    pub count: u32,
    pub timings: bool,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            ring: None,
            ideals: Vec::new(),
            seqs: Vec::new(),
            budgets: Budgets::default(),
            degree: 10,
            index: None,
            power: 1,
            count: 3,
            timings: false,
        }
    }
}

/// Result of one command: the JSON envelope and its text rendering.
#[derive(Clone, Debug)]
pub struct Output {
    pub report: Value,
    pub text: String,
}

pub fn run_command(session: &Session, command: Command, opts: &Options) -> Result<Output, CliError> {
    if command == Command::Corpus {
        return Err(CliError::usage("corpus takes a directory: qgor corpus DIR"));
    }
    let decl = select_ring(session, opts)?;
    let start = Instant::now();
    let (inputs, result) = match decl.build() {
        AnyRing::Q(r) => Ctx::new(session, decl, r, opts)?.run(command)?,
        AnyRing::P(r) => Ctx::new(session, decl, r, opts)?.run(command)?,
    };
    let mut timings = BTreeMap::new();
    if opts.timings {
        timings.insert("total".to_string(), start.elapsed().as_millis() as u64);
    }
    let env = Envelope::new(command.name(), &opts.budgets, inputs, result.clone(), timings);
    Ok(Output { report: env.to_value(), text: render_text(&result) })
}

fn select_ring<'a>(session: &'a Session, opts: &Options) -> Result<&'a RingDecl, CliError> {
    match &opts.ring {
        Some(name) => session.ring(name).ok_or_else(|| CliError::usage(format!("no ring named `{name}`"))),
        None => match session.rings.as_slice() {
            [only] => Ok(only),
            [] => Err(CliError::usage("the session declares no ring")),
            _ => Err(CliError::usage("the session declares several rings; pick one with --ring")),
        },
    }
}

struct Ctx<'a, F: Field> {
    session: &'a Session,
    decl: &'a RingDecl,
    ring: Arc<PolyRing<F>>,
    opts: &'a Options,
    /// Name of the defining ideal, if the ring has one.
    defining: Option<String>,
    spec: RingSpec<F>,
}

impl<'a, F: Field> Ctx<'a, F> {
    fn new(session: &'a Session, decl: &'a RingDecl, ring: Arc<PolyRing<F>>, opts: &'a Options) -> Result<Self, CliError> {
        let defining = session.lists_of(&decl.name, ListKind::Ideal).next().map(|l| l.name.clone());
        let gens = match &defining {
            Some(name) => session.list(name).unwrap().polys(&ring),
            None => Vec::new(),
        };
        let spec = RingSpec::new(ring.clone(), gens).map_err(CliError::from)?;
        Ok(Self { session, decl, ring, opts, defining, spec })
    }

    fn list(&self, name: &str, kind: ListKind) -> Result<Vec<Polynomial<F>>, CliError> {
        let what = if kind == ListKind::Ideal { "ideal" } else { "seq" };
        let decl = self.session.list(name).ok_or_else(|| CliError::usage(format!("no {what} named `{name}`")))?;
        if decl.kind != kind {
            return Err(CliError::usage(format!("`{name}` is not an {what}")));
        }
        if decl.ring != self.decl.name {
            return Err(CliError::usage(format!("`{name}` belongs to ring `{}`, not `{}`", decl.ring, self.decl.name)));
        }
        Ok(decl.polys(&self.ring))
    }

    fn ideal(&self, name: &str) -> Result<Ideal<F>, CliError> {
        Ideal::new(&self.ring, self.list(name, ListKind::Ideal)?).map_err(CliError::from)
    }

    /// The `k`-th `--ideal`, falling back to the defining ideal for `k = 0`.
    fn ideal_arg(&self, k: usize) -> Result<(String, Ideal<F>), CliError> {
        match self.opts.ideals.get(k) {
            Some(name) => Ok((name.clone(), self.ideal(name)?)),
            None if k == 0 => match &self.defining {
                Some(name) => Ok((name.clone(), self.ideal(name)?)),
                None => Ok(("(0)".into(), Ideal::zero(&self.ring))),
            },
            None => Err(CliError::usage(format!("this command needs {} --ideal arguments", k + 1))),
        }
    }

    fn required_ideal(&self, k: usize) -> Result<(String, Ideal<F>), CliError> {
        match self.opts.ideals.get(k) {
            Some(name) => Ok((name.clone(), self.ideal(name)?)),
            None => Err(CliError::usage(format!("this command needs {} --ideal arguments", k + 1))),
        }
    }

    fn seq(&self, k: usize) -> Result<Option<Vec<Polynomial<F>>>, CliError> {
        self.opts.seqs.get(k).map(|name| self.list(name, ListKind::Seq)).transpose()
    }

    /// The given sequence as a certified system of parameters, or one found
    /// by the seeded search.
    fn param_system(&self, k: usize) -> Result<ParamSystem<F>, CliError> {
        let b = &self.opts.budgets;
        match self.seq(k)? {
            Some(xs) => ParamSystem::verify(&self.spec, xs).map_err(CliError::from),
            None => analysis::find_sop(&self.spec, b.seed, b.sop_max_degree).map_err(CliError::from),
        }
    }

    fn element(&self) -> Result<Polynomial<F>, CliError> {
        match self.seq(0)? {
            Some(xs) if !xs.is_empty() => Ok(xs[0].clone()),
            _ => Err(CliError::usage("this command needs --seq naming a sequence whose first element is x")),
        }
    }

    fn fmt_ideal(&self, j: &Ideal<F>) -> Value {
        json!(j.gb().polys().iter().map(|p| self.ring.format(p)).collect::<Vec<_>>())
    }

    fn inputs(&self) -> Value {
        let mut ideals = serde_json::Map::new();
        for name in self.opts.ideals.iter().chain(self.defining.iter()) {
            if let Some(l) = self.session.list(name) {
                ideals.insert(name.clone(), json!(l.items));
            }
        }
        let mut seqs = serde_json::Map::new();
        for name in &self.opts.seqs {
            if let Some(l) = self.session.list(name) {
                seqs.insert(name.clone(), json!(l.items));
            }
        }
        json!({
            "ring": self.decl.name,
            "ring_description": self.spec.describe(),
            "field": self.decl.field.name(),
            "order": format!("{:?}", self.decl.order).to_lowercase(),
            "defining_ideal": self.defining,
            "ideals": ideals,
            "seqs": seqs,
            "options": {
                "degree": self.opts.degree,
                "index": self.opts.index,
                "power": self.opts.power,
                "count": self.opts.count,
            },
        })
    }

    fn run(&self, command: Command) -> Result<(Value, Value), CliError> {
        let result = self.dispatch(command)?;
        Ok((self.inputs(), result))
    }

    fn dispatch(&self, command: Command) -> Result<Value, CliError> {
        let b = &self.opts.budgets;
        let i = self.spec.ideal();
        Ok(match command {
            Command::Gb => {
                let (name, a) = self.ideal_arg(0)?;
                json!({ "ideal": name, "basis": self.fmt_ideal(&a), "size": a.gb().len() })
            }
            Command::Dim => {
                let (name, a) = self.ideal_arg(0)?;
                json!({ "ideal": name, "dim": invariants::krull_dimension(&a) })
            }
            Command::Colon => {
                let (_, a) = self.ideal_arg(0)?;
                let b_ideal = self.divisor()?;
                json!({ "colon": self.fmt_ideal(&a.colon(&b_ideal)?) })
            }
            Command::Intersect => {
                let (_, a) = self.required_ideal(0)?;
                let (_, c) = self.required_ideal(1)?;
                json!({ "intersection": self.fmt_ideal(&a.intersect(&c)?) })
            }
            Command::Saturate => {
                let (_, a) = self.ideal_arg(0)?;
                let (sat, k) = a.saturate(&self.divisor()?)?;
                json!({ "saturation": self.fmt_ideal(&sat), "exponent": k })
            }
            Command::Hilbert => {
                let (name, a) = self.ideal_arg(0)?;
                let t = invariants::hilbert_table(&a, self.opts.degree);
                json!({ "ideal": name, "values": t.values, "total": t.total })
            }
            Command::Mu => {
                let (name, a) = self.required_ideal(0)?;
                json!({ "ideal": name, "mu": invariants::mu_homogeneous(&a, i)? })
            }
            Command::Socle => {
                let a = match self.opts.ideals.first() {
                    Some(name) => self.ideal(name)?,
                    None => i.clone(),
                };
                json!({ "socle_dimension": invariants::socle_dimension(&a, i)? })
            }
            Command::Irreducible => {
                let (name, a) = self.required_ideal(0)?;
                let cert = invariants::is_irreducible_mprimary(&a, i)?;
                json!({ "ideal": name, "certificate": cert })
            }
            Command::LimitClosure => {
                let x = self.param_system(0)?;
                let lim = analysis::limit_closure(&self.spec, &x, self.opts.power, b)?;
                json!({
                    "sop": x.format(&self.spec),
                    "power": lim.power,
                    "generators": self.fmt_ideal(&lim.ideal),
                    "t_stab": lim.t_stab,
                    "window": lim.window,
                    "chain_length": lim.chain.len(),
                })
            }
            Command::Sop => {
                let x = analysis::find_sop(&self.spec, b.seed, b.sop_max_degree)?;
                json!({ "sop": x.format(&self.spec), "degrees": x.degrees(), "seed_used": x.seed(), "dim": self.spec.dim() })
            }
            Command::Resolve => {
                let (name, a) = self.ideal_arg(0)?;
                let res = homology::free_resolution(&ModulePresentation::cyclic(&a), self.ring.nvars() + 1)?;
                json!({
                    "ideal": name,
                    "betti": res.betti(),
                    "totals": res.betti_totals(),
                    "complete": res.is_complete(),
                    "exact": res.composes_to_zero(&self.ring) && res.is_exact(&self.ring),
                })
            }
            Command::Ext => {
                let (name, a) = self.ideal_arg(0)?;
                let idx = self.opts.index.ok_or_else(|| CliError::usage("ext needs --index"))?;
                let e = homology::ext_module(&ModulePresentation::cyclic(&a), idx)?;
                self.module_json(json!({ "ideal": name, "index": idx }), &e.presentation)
            }
            Command::Canonical => {
                let w = homology::canonical_module(&self.spec)?;
                self.module_json(json!({ "index": w.index, "codim": self.spec.codim() }), &w.presentation)
            }
            Command::Depth => {
                let (name, a) = self.ideal_arg(0)?;
                let table = homology::ExtTable::new(&ModulePresentation::cyclic(&a))?;
                let depth = table.depth()?;
                let dim = invariants::krull_dimension(&a);
                json!({
                    "ideal": name,
                    "depth": depth,
                    "dim": dim,
                    "cohen_macaulay": depth as i32 == dim,
                    "nonzero_ext": table.nonzero(),
                })
            }
            Command::Qgcheck => {
                let x = self.param_system(0)?;
                let rep = analysis::qg_check(&self.spec, Some(&x), b)?;
                let mut v = serde_json::to_value(&rep).expect("serializable");
                v["probes"] = self.probes(&x);
                v
            }
            Command::Buchsbaum => {
                let x = self.param_system(0)?;
                let p = analysis::buchsbaum_probe(&self.spec, &x, b)?;
                let mut v = serde_json::to_value(&p).expect("serializable");
                v["sop"] = json!(x.format(&self.spec));
                v
            }
            Command::Gcm => {
                let mut systems = Vec::new();
                for k in 0..self.opts.seqs.len().max(1) {
                    systems.push(self.param_system(k)?);
                }
                let rep = analysis::gcm_exponent(&self.spec, &systems, b)?;
                let mut v = serde_json::to_value(&rep).expect("serializable");
                v["systems"] = json!(systems.iter().map(|x| x.format(&self.spec)).collect::<Vec<_>>());
                v
            }
            Command::Deform => {
                let x = self.element()?;
                let p = analysis::deformation_probe(&self.spec, &x, self.opts.count, b)?;
                json!({
                    "x": self.ring.format(&x),
                    "verdicts": p.verdicts,
                    "reports": p.reports,
                })
            }
            Command::QuotientProbe => {
                let x = self.element()?;
                let p = analysis::quotient_probe(&self.spec, &x, b)?;
                let mut v = serde_json::to_value(&p).expect("serializable");
                v["x"] = json!(self.ring.format(&x));
                v["label"] = json!(if p.hypothesis_holds { "hypothesis holds" } else { "hypothesis violated" });
                v
            }
            Command::Corpus => unreachable!("handled by run_command"),
        })
    }

    /// Second `--ideal`, or the ideal generated by the first `--seq`.
    fn divisor(&self) -> Result<Ideal<F>, CliError> {
        if self.opts.ideals.len() >= 2 {
            return Ok(self.required_ideal(1)?.1);
        }
        match self.seq(0)? {
            Some(xs) => Ideal::new(&self.ring, xs).map_err(CliError::from),
            None => Err(CliError::usage("this command needs a second --ideal or a --seq")),
        }
    }

    fn module_json(&self, mut head: Value, m: &ModulePresentation<F>) -> Value {
        let m = m.minimize();
        head["zero"] = json!(m.is_zero());
        head["mu"] = json!(m.mu());
        head["generator_degrees"] = json!(m.gen_degrees());
        head["relation_count"] = json!(m.relations().len());
        head["annihilator"] = if m.is_zero() { json!(["1"]) } else { self.fmt_ideal(&m.annihilator()) };
        head
    }

    /// Buchsbaum and generalized Cohen-Macaulay probes attached to a
    /// quasi-Gorenstein report; budget failures are recorded, not raised.
    fn probes(&self, x: &ParamSystem<F>) -> Value {
        let b = &self.opts.budgets;
        let buchsbaum = match analysis::buchsbaum_probe(&self.spec, x, b) {
            Ok(p) => serde_json::to_value(p).expect("serializable"),
            Err(e) => json!({ "error": e.to_string() }),
        };
        let gcm = match analysis::gcm_exponent(&self.spec, std::slice::from_ref(x), b) {
            Ok(g) => serde_json::to_value(g).expect("serializable"),
            Err(e) => json!({ "error": e.to_string() }),
        };
        let regular = analysis::is_regular_sequence_via_limit(&self.spec, x, b).ok();
        json!({ "buchsbaum": buchsbaum, "gcm": gcm, "regular_sequence": regular })
    }
}
