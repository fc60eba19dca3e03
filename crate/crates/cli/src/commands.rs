use std::fs;
use std::path::Path;

use adjrank_core::exact::{parse_matrix, parse_rational};
use adjrank_core::hurwitz::{build_hr_family, certify_hr, FamilyFile};
use adjrank_core::psi::{certify_psi_s_invertible, z_membership, PsiCertificate};
use adjrank_core::radon_hurwitz::{emit_rho_table, factorize, RhoReport};
use adjrank_core::subspace::{minrank_probe, pencil_minrank_exact, SubspaceManifest};
use adjrank_core::verify::{self, VerifyReport};
use adjrank_core::{HrCertificate, PsiError, SubspaceBasis, ZMembershipReport};
use serde::Serialize;

use crate::args::{Cli, Command, HrArgs, MinrankArgs, PsiArgs, RhoArgs, SuiteArg, VerifyArgs};
use crate::render;
use crate::Failure;

pub type Outcome = Result<String, (String, Failure)>;

fn input<E: ToString>(e: E) -> (String, Failure) {
    (String::new(), Failure::Input(e.to_string()))
}

fn read(path: &Path) -> Result<String, (String, Failure)> {
    fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))
}

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Rho(a) => rho(a, cli),
        Command::Verify(a) => verify(a, cli),
        Command::Psi(a) => psi(a, cli),
        Command::Minrank(a) => minrank(a, cli),
        Command::Hr(a) => hr(a, cli),
    }
}

fn rho(args: &RhoArgs, cli: &Cli) -> Outcome {
    if args.table {
        let rows = emit_rho_table(args.b_max).map_err(input)?;
        return Ok(render::rho_table(&rows, cli.format));
    }
    let n = args.n.expect("clap requires --n without --table");
    let report = RhoReport::from(factorize(n).map_err(input)?);
    Ok(render::rho(&report, cli.format))
}

fn verify(args: &VerifyArgs, cli: &Cli) -> Outcome {
    let ns = &args.n.0;
    let trials = args.trials as usize;
    let want = |s: SuiteArg| args.suite == s || args.suite == SuiteArg::All;
    let mut props = Vec::new();
    if want(SuiteArg::Psi) {
        let ns: Vec<usize> = ns.iter().copied().filter(|&n| n >= 2).collect();
        if ns.is_empty() {
            return Err(input("the psi suite needs an order n >= 2"));
        }
        props.extend(verify::psi_suite(&ns, trials, args.seed));
    }
    if want(SuiteArg::Adjugate) {
        props.extend(verify::adjugate_suite(ns, trials, args.low_rank_trials as usize, args.seed));
    }
    if want(SuiteArg::Homotopy) {
        props.extend(verify::homotopy_suite(ns, trials, args.seed));
    }
    if want(SuiteArg::Ktheory) {
        props.extend(verify::ktheory_suite(args.n_max, args.d_max));
    }
    if want(SuiteArg::Hr) {
        let even: Vec<u64> = ns.iter().filter(|&&n| n % 2 == 0).map(|&n| n as u64).collect();
        if even.is_empty() {
            return Err(input("the hr suite needs an even order"));
        }
        props.extend(verify::hr_suite(&even, trials, args.seed).map_err(input)?);
    }
    let report = VerifyReport::new(args.seed, props);
    let out = render::verify(&report, cli.format);
    if report.passed {
        Ok(out)
    } else {
        let failed = report.propositions.iter().filter(|p| !p.passed).count();
        Err((out, Failure::Counterexample(format!("{failed} proposition(s) failed"))))
    }
}

#[derive(Serialize)]
pub struct PsiReport {
    pub certificate: PsiCertificate,
    pub z_membership: ZMembershipReport,
}

fn psi(args: &PsiArgs, cli: &Cli) -> Outcome {
    let a = parse_matrix(&read(&args.input)?).map_err(input)?;
    let s = parse_rational(&args.s).map_err(input)?;
    let z = z_membership(&a);
    match certify_psi_s_invertible(&a, &s) {
        Ok(certificate) => Ok(render::psi(
            &PsiReport {
                certificate,
                z_membership: z,
            },
            cli.format,
        )),
        Err(e @ PsiError::Counterexample { .. }) => Err((String::new(), Failure::Counterexample(e.to_string()))),
    }
}

fn minrank(args: &MinrankArgs, cli: &Cli) -> Outcome {
    let (class, basis) = SubspaceManifest::load(&args.input).map_err(input)?;
    let v = SubspaceBasis::new(class, basis).map_err(input)?;
    let report = if args.exact {
        if v.d() != 2 {
            return Err(input(format!("exact mode needs a pencil (d = 2), got d = {}", v.d())));
        }
        pencil_minrank_exact(&v.basis()[0], &v.basis()[1]).map_err(input)?
    } else {
        minrank_probe(&v, args.trials as usize, args.seed).map_err(input)?
    };
    Ok(render::minrank(&report, cli.format))
}

#[derive(Serialize)]
pub struct HrReport {
    pub certificate: HrCertificate,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub written: Option<String>,
}

fn hr(args: &HrArgs, cli: &Cli) -> Outcome {
    let (family, written) = match (&args.n, &args.input) {
        (Some(n), _) => (build_hr_family(*n).map_err(input)?, args.out.clone()),
        (None, Some(path)) => {
            let file: FamilyFile = serde_json::from_str(&read(path)?).map_err(input)?;
            (file.into_family().map_err(input)?, None)
        }
        (None, None) => unreachable!("clap requires --n or --in"),
    };
    let certificate = certify_hr(&family);
    if let Some(path) = &written {
        let json = serde_json::to_string_pretty(&FamilyFile::new(&family, &certificate)).expect("family serializes");
        fs::write(path, json + "\n").map_err(|e| input(format!("{}: {e}", path.display())))?;
    }
    let passed = certificate.passed();
    let out = render::hr(
        &HrReport {
            certificate,
            written: written.map(|p| p.display().to_string()),
        },
        cli.format,
    );
    if passed {
        Ok(out)
    } else {
        Err((out, Failure::Counterexample("family failed certification".into())))
    }
}
