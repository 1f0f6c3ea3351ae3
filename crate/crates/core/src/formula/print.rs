//! Printers. Both outputs re-parse to the identical primitive tree.

use super::Formula;

// Binding strength; higher binds tighter.
const IFF: u8 = 1;
const IMP: u8 = 2;
const OR: u8 = 3;
const AND: u8 = 4;
const UNARY: u8 = 5;

pub(super) fn primitive(f: &Formula) -> String {
    let mut out = String::new();
    write_primitive(f, &mut out);
    out
}

fn write_primitive(f: &Formula, out: &mut String) {
    match f {
        Formula::Var(v) => out.push_str(v.name()),
        Formula::Top => out.push_str("top"),
        Formula::Not(g) => {
            out.push('~');
            write_primitive_operand(g, out);
        }
        Formula::Box(g) => {
            out.push_str("box ");
            write_primitive_operand(g, out);
        }
        Formula::And(a, b) => {
            if matches!(**a, Formula::And(..)) {
                out.push('(');
                write_primitive(a, out);
                out.push(')');
            } else {
                write_primitive(a, out);
            }
            out.push_str(" & ");
            write_primitive(b, out);
        }
    }
}

fn write_primitive_operand(f: &Formula, out: &mut String) {
    if matches!(f, Formula::And(..)) {
        out.push('(');
        write_primitive(f, out);
        out.push(')');
    } else {
        write_primitive(f, out);
    }
}

/// Derived-connective view of a primitive node, if it matches one exactly.
enum Shape<'a> {
    Atom(String),
    Unary(&'static str, &'a Formula),
    Binary(u8, &'static str, &'a Formula, &'a Formula),
}

fn un_not(f: &Formula) -> Option<&Formula> {
    match f {
        Formula::Not(g) => Some(g),
        _ => None,
    }
}

fn un_dia(f: &Formula) -> Option<&Formula> {
    match un_not(f)? {
        Formula::Box(g) => un_not(g),
        _ => None,
    }
}

fn un_imp(f: &Formula) -> Option<(&Formula, &Formula)> {
    match un_not(f)? {
        Formula::And(a, b) => Some((a, un_not(b)?)),
        _ => None,
    }
}

fn un_or(f: &Formula) -> Option<(&Formula, &Formula)> {
    match un_not(f)? {
        Formula::And(a, b) => Some((un_not(a)?, un_not(b)?)),
        _ => None,
    }
}

fn shape(f: &Formula) -> Shape<'_> {
    match f {
        Formula::Var(v) => Shape::Atom(v.name().to_string()),
        Formula::Top => Shape::Atom("top".into()),
        Formula::Box(g) => Shape::Unary("box", g),
        Formula::And(a, b) => {
            if let Some((l, r)) = un_imp(a) {
                if un_imp(b) == Some((r, l)) {
                    return Shape::Binary(IFF, "<->", l, r);
                }
            }
            if let Formula::Box(bb) = &**b {
                if **bb == **a {
                    return Shape::Unary("boxs ", a);
                }
            }
            Shape::Binary(AND, "&", a, b)
        }
        Formula::Not(g) => {
            if **g == Formula::Top {
                return Shape::Atom("bot".into());
            }
            if let Some((a, b)) = un_or(f) {
                if un_dia(b) == Some(a) {
                    return Shape::Unary("dias ", a);
                }
                // `~(~x & ~b)` reads as `x | b` or as `~x -> b`; prefer the
                // implication when `~x` is itself a connective or a diamond.
                let (ante, cons) = un_imp(f).expect("or shape is an implication shape");
                let prefer_imp = match shape(ante) {
                    Shape::Binary(..) => true,
                    Shape::Unary(op, h) => op == "dia " && *h != Formula::Top,
                    Shape::Atom(_) => false,
                };
                if prefer_imp {
                    return Shape::Binary(IMP, "->", ante, cons);
                }
                return Shape::Binary(OR, "|", a, b);
            }
            if let Some((a, b)) = un_imp(f) {
                return Shape::Binary(IMP, "->", a, b);
            }
            if let Some(h) = un_dia(f) {
                return Shape::Unary("dia ", h);
            }
            Shape::Unary("~", g)
        }
    }
}

fn level(f: &Formula) -> u8 {
    match shape(f) {
        Shape::Atom(_) | Shape::Unary(..) => UNARY,
        Shape::Binary(l, ..) => l,
    }
}

pub(super) fn sugared(f: &Formula) -> String {
    let mut out = String::new();
    write_sugared(f, &mut out);
    out
}

fn write_sugared(f: &Formula, out: &mut String) {
    match shape(f) {
        Shape::Atom(s) => out.push_str(&s),
        Shape::Unary(op, g) => {
            out.push_str(op);
            if op == "box" {
                out.push(' ');
            }
            write_wrapped(g, level(g) < UNARY, out);
        }
        Shape::Binary(l, op, a, b) => {
            write_wrapped(a, level(a) <= l, out);
            out.push(' ');
            out.push_str(op);
            out.push(' ');
            write_wrapped(b, level(b) < l, out);
        }
    }
}

fn write_wrapped(f: &Formula, paren: bool, out: &mut String) {
    if paren {
        out.push('(');
        write_sugared(f, out);
        out.push(')');
    } else {
        write_sugared(f, out);
    }
}
