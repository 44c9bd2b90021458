//! Text grammar for naming algebras on the command line.

use super::{
    neutral_algebra, sim_algebra, so_basis, unitary_family, Calibration, LieAlgebraRep,
    NeutralKind, SimParams, SimType, UnitaryKind,
};
use crate::clifford::Signature;
use crate::error::{Error, Result};

pub const ALGEBRA_GRAMMAR: &str = "\
algebra := so:R,S | u:P,Q | su:P,Q | sp:P,Q
         | g2 | g2split | spin7 | spin34
         | sim:type=T,h=<algebra>,n=N[,m=M]
         | neutral-gl:N | neutral-sl:N
         | file:<path>";

fn fail(input: &str, production: &str) -> Error {
    Error::AlgebraSpec {
        input: input.to_string(),
        production: production.to_string(),
    }
}

fn pair(input: &str, body: &str, production: &str) -> Result<(usize, usize)> {
    let (a, b) = body
        .split_once(',')
        .ok_or_else(|| fail(input, production))?;
    let a = a.trim().parse().map_err(|_| fail(input, production))?;
    let b = b.trim().parse().map_err(|_| fail(input, production))?;
    Ok((a, b))
}

fn count(input: &str, body: &str, production: &str) -> Result<usize> {
    body.trim().parse().map_err(|_| fail(input, production))
}

pub fn parse_algebra(input: &str) -> Result<LieAlgebraRep> {
    let s = input.trim();
    match s {
        "g2" => return Calibration::G2.stabilizer(),
        "g2split" => return Calibration::G2Split.stabilizer(),
        "spin7" => return Calibration::Spin7.stabilizer(),
        "spin34" => return Calibration::Spin34.stabilizer(),
        _ => {}
    }
    let (head, body) = s
        .split_once(':')
        .ok_or_else(|| fail(input, "algebra (one of the forms in the grammar)"))?;
    match head {
        "so" => {
            let (r, q) = pair(input, body, "so:R,S")?;
            Ok(so_basis(Signature::new(r, q)?))
        }
        "u" | "su" | "sp" => {
            let production = format!("{head}:P,Q");
            let (p, q) = pair(input, body, &production)?;
            let kind = match head {
                "u" => UnitaryKind::U,
                "su" => UnitaryKind::Su,
                _ => UnitaryKind::Sp,
            };
            unitary_family(kind, p, q)
        }
        "neutral-gl" => neutral_algebra(NeutralKind::Gl, count(input, body, "neutral-gl:N")?),
        "neutral-sl" => neutral_algebra(NeutralKind::Sl, count(input, body, "neutral-sl:N")?),
        "file" => {
            let text = std::fs::read_to_string(body)?;
            LieAlgebraRep::from_json(&text)
        }
        "sim" => parse_sim(input, body),
        _ => Err(fail(
            input,
            "algebra head (so, u, su, sp, sim, neutral-gl, neutral-sl, file)",
        )),
    }
}

/// `type=T,h=<algebra>,n=N[,m=M]`; the nested algebra may itself contain commas.
fn parse_sim(input: &str, body: &str) -> Result<LieAlgebraRep> {
    const PRODUCTION: &str = "sim:type=T,h=<algebra>,n=N[,m=M]";
    let rest = body
        .strip_prefix("type=")
        .ok_or_else(|| fail(input, "sim:type=T,..."))?;
    let (t, rest) = rest
        .split_once(',')
        .ok_or_else(|| fail(input, PRODUCTION))?;
    let t: u8 = t
        .trim()
        .parse()
        .map_err(|_| fail(input, "sim type T in 1..4"))?;
    let kind = SimType::from_number(t).map_err(|_| fail(input, "sim type T in 1..4"))?;
    let rest = rest
        .strip_prefix("h=")
        .ok_or_else(|| fail(input, "sim:...,h=<algebra>,..."))?;
    let at = rest
        .rfind(",n=")
        .ok_or_else(|| fail(input, "sim:...,n=N"))?;
    let (h_spec, tail) = (&rest[..at], &rest[at + 3..]);
    let (n, m) = match tail.split_once(",m=") {
        Some((n, m)) => (n, Some(count(input, m, "sim:...,m=M")?)),
        None => (tail, None),
    };
    let n = count(input, n, "sim:...,n=N")?;
    let h = parse_algebra(h_spec)?;
    let mut params = SimParams::new(kind, h);
    params.m = m;
    sim_algebra(&params, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_each_production() {
        assert_eq!(parse_algebra("so:1,3").unwrap().dim(), 6);
        assert_eq!(parse_algebra("u:0,2").unwrap().dim(), 4);
        assert_eq!(parse_algebra("su:0,2").unwrap().dim(), 3);
        assert_eq!(parse_algebra("sp:0,1").unwrap().dim(), 3);
        assert_eq!(parse_algebra("g2").unwrap().dim(), 14);
        assert_eq!(parse_algebra("neutral-sl:2").unwrap().dim(), 3);
        assert_eq!(parse_algebra("sim:type=2,h=su:0,2,n=4").unwrap().dim(), 7);
        assert_eq!(parse_algebra("sim:type=3,h=u:0,2,n=4").unwrap().dim(), 8);
        assert_eq!(
            parse_algebra("sim:type=4,h=u:0,1,n=4,m=3").unwrap().dim(),
            4
        );
    }

    #[test]
    fn diagnostics_name_the_production() {
        let e = parse_algebra("so:1").unwrap_err().to_string();
        assert!(e.contains("so:R,S"), "{e}");
        let e = parse_algebra("sim:type=9,h=u:0,1,n=2")
            .unwrap_err()
            .to_string();
        assert!(e.contains("sim type"), "{e}");
        let e = parse_algebra("bogus:1").unwrap_err().to_string();
        assert!(e.contains("algebra head"), "{e}");
        assert!(parse_algebra("nothing").is_err());
    }
}
