"""Command-line front end: descriptor ingestion, query dispatch, dual output.

The descriptor is a flat key-value text file with sections [family],
[node.<id>] and [characters]; values are exact rationals written p/q, or bare
identifiers for symbolic characters.  Every subcommand accepts an optional
descriptor path (default: the fully symbolic one-node family over a
1-dimensional base) and an output mode.

Exit codes: 0 success, 1 descriptor/validation error, 2 engine error.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction

import click

from .basering import BaseClass
from .charpoly import CharPoly
from .family import FamilyDescriptor, Node, symbolic_family
from .tautmod import gamma_power, integrate, to_data
from .transfer import pluecker_c2, pluecker_s2, punctual_chern, transfer
from . import chern as chern_mod


class DescriptorError(Exception):
    pass


def _parse_value(text, where):
    text = text.strip()
    try:
        return CharPoly.const(Fraction(text))
    except (ValueError, ZeroDivisionError):
        pass
    if text.replace("_", "").isalnum() and not text[0].isdigit():
        return CharPoly.symbol(text)
    raise DescriptorError("%s: cannot parse value %r (rational p/q or symbol)" % (where, text))


def load_descriptor(path) -> FamilyDescriptor:
    """Parse and validate a family descriptor file."""
    sections = {"family": {}, "characters": {}}
    node_sections = {}
    current = None
    try:
        lines = open(path).read().splitlines()
    except OSError as exc:
        raise DescriptorError("cannot read %s: %s" % (path, exc))
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        where = "%s:%d" % (path, lineno)
        if line.startswith("[") and line.endswith("]"):
            name = line[1:-1].strip()
            if name == "family" or name == "characters":
                current = sections[name]
            elif name.startswith("node."):
                node_id = name[5:]
                if not node_id:
                    raise DescriptorError("%s: empty node id" % where)
                current = node_sections.setdefault(node_id, {})
            else:
                raise DescriptorError("%s: unknown section [%s]" % (where, name))
            continue
        if "=" not in line:
            raise DescriptorError("%s: expected key = value" % where)
        if current is None:
            raise DescriptorError("%s: key outside of any section" % where)
        key, _, value = line.partition("=")
        current[key.strip()] = (value.strip(), where)

    fam_raw = sections["family"]
    if "dim_b" not in fam_raw:
        raise DescriptorError("%s: [family] needs dim_b" % path)
    try:
        dim_b = int(fam_raw["dim_b"][0])
    except ValueError:
        raise DescriptorError("%s: dim_b must be an integer" % fam_raw["dim_b"][1])
    if dim_b < 1:
        raise DescriptorError("%s: dim_b must be >= 1" % fam_raw["dim_b"][1])
    genus = None
    if "genus" in fam_raw:
        try:
            genus = Fraction(fam_raw["genus"][0])
        except ValueError:
            raise DescriptorError("%s: genus must be rational" % fam_raw["genus"][1])
        if genus < 0:
            raise DescriptorError("%s: genus must be >= 0" % fam_raw["genus"][1])

    chars = {}
    for key, (value, where) in sections["characters"].items():
        chars[key] = _parse_value(value, where)
    if genus is not None and "twogm2" not in chars:
        chars["twogm2"] = CharPoly.const(2 * genus - 2)

    nodes = []
    for node_id, body in node_sections.items():
        if "weight" not in body:
            raise DescriptorError("%s: node %s needs a weight" % (path, node_id))
        weight = _parse_value(*body["weight"])
        if weight.is_constant() and weight.constant_value() <= 0:
            raise DescriptorError(
                "%s: node %s weight must be positive" % (body["weight"][1], node_id)
            )
        tau = None
        if "tauL" in body:
            tau = _parse_value(*body["tauL"])
        elif dim_b == 1:
            tau = CharPoly.const(0)
        table = {}
        for key, (value, where) in body.items():
            if key.startswith("IT["):
                table[key] = _parse_value(value, where)
        nodes.append(Node(node_id, weight, tau_L=tau, psi_table=table))
    return FamilyDescriptor(dim_b, chars=chars, nodes=nodes, label=path)


def _family(descriptor):
    if descriptor is None:
        return symbolic_family(1)
    return load_descriptor(descriptor)


def _emit(payload, output):
    if output == "json":
        click.echo(json.dumps(payload, sort_keys=True, default=str))
    else:
        if isinstance(payload, dict):
            for key in payload:
                click.echo("%s = %s" % (key, payload[key]))
        else:
            click.echo(payload)


def _alias_l2(poly: CharPoly) -> str:
    # the self-intersection character of L prints as L2 in the contact formulas
    return str(poly.substitute({"b": CharPoly.symbol("L2")}))


_descriptor_option = click.argument("descriptor", type=click.Path(), required=False)
_output_option = click.option(
    "--output", type=click.Choice(["text", "json"]), default="text"
)


@click.group()
def main():
    """Exact intersection calculus on Hilbert schemes of nodal curve families."""


@main.command("gamma-power")
@click.option("--m", type=int, required=True)
@click.option("--k", type=int, required=True)
@click.option("--integrate", "do_integrate", is_flag=True, help="evaluate the degree")
@_descriptor_option
@_output_option
def gamma_power_cmd(m, k, do_integrate, descriptor, output):
    """Expand the k-th power of the degree-m discriminant polarization."""
    fam = _family(descriptor)
    cls = gamma_power(fam, m, k)
    if do_integrate:
        _emit(str(integrate(cls)), output)
    elif output == "json":
        _emit(to_data(cls), output)
    else:
        _emit(cls.render(), output)


@main.command("chern")
@click.option("--m", type=int, required=True)
@click.option("--closed-form", is_flag=True, help="use the diagonal closed form")
@_descriptor_option
@_output_option
def chern_cmd(m, closed_form, descriptor, output):
    """Total Chern class of the rank-m tautological bundle of L."""
    fam = _family(descriptor)
    cls = (
        chern_mod.chern_closed_form(fam, m)
        if closed_form
        else chern_mod.chern_class_on_hilb(fam, m)
    )
    _emit(to_data(cls) if output == "json" else cls.render(), output)


@main.command("chern-numbers")
@_descriptor_option
@_output_option
def chern_numbers_cmd(descriptor, output):
    """The four degree-4 Chern numbers of the rank-3 bundle on the 3-step flag."""
    fam = _family(descriptor)
    numbers = {k: str(v) for k, v in chern_mod.chern_numbers_w3(fam).items()}
    _emit(numbers, output)


@main.command("formulary")
@_descriptor_option
@_output_option
def formulary_cmd(descriptor, output):
    """Evaluate all degree-4 monomials in L1, L2, L3, G2, G3 on the 3-step flag."""
    fam = _family(descriptor)
    rows = {}
    for key in _degree4_keys():
        name = _monomial_name(key)
        rows[name] = str(chern_mod.w3_monomial(fam, key))
    _emit(rows, output)


def _degree4_keys():
    out = []
    for a1 in range(5):
        for a2 in range(5 - a1):
            for a3 in range(5 - a1 - a2):
                for k2 in range(5 - a1 - a2 - a3):
                    k3 = 4 - a1 - a2 - a3 - k2
                    out.append((a1, a2, a3, k2, k3))
    return out


def _monomial_name(key):
    names = ["L1", "L2", "L3", "G2", "G3"]
    bits = []
    for name, e in zip(names, key):
        if e == 1:
            bits.append(name)
        elif e > 1:
            bits.append("%s^%d" % (name, e))
    return "*".join(bits) or "1"


@main.command("transfer")
@click.option("--class-json", "class_json", type=str, required=True,
              help="serialized class to transfer")
@click.option("--beta", type=str, default="1", help="twist: 1, L, omega, L^2, ...")
@_descriptor_option
@_output_option
def transfer_cmd(class_json, beta, descriptor, output):
    """Apply the flaglet transfer to a serialized tautological class."""
    from .tautmod import from_data

    fam = _family(descriptor)
    data = json.loads(class_json)
    cls = from_data(fam, data)
    twist = _parse_base_class(fam, beta)
    moved = transfer(cls, twist)
    _emit(to_data(moved) if output == "json" else moved.render(), output)


def _parse_base_class(fam, text):
    ring = fam.total_ring
    out = BaseClass.unit(ring)
    text = text.strip()
    if text == "1":
        return out
    for factor in text.split("*"):
        name, _, power = factor.partition("^")
        power = int(power) if power else 1
        out = out * (BaseClass.gen(ring, name.strip()) ** power)
    return out


@main.command("punctual-chern")
@click.option("--m", type=int, required=True)
@_descriptor_option
@_output_option
def punctual_chern_cmd(m, descriptor, output):
    """Chern classes of the tautological bundle on the punctual Hilbert scheme."""
    fam = _family(descriptor)
    pc = punctual_chern(fam, m)
    if output == "json":
        payload = {
            "m": m,
            "interior": str(pc.interior),
            "nodes": {
                nid: {
                    "scroll": {i: str(cls) for i, cls in pc.scroll[nid].items()},
                    "section": {i: str(cls) for i, cls in pc.section[nid].items()},
                }
                for nid in sorted(pc.scroll)
            },
        }
        _emit(payload, output)
    else:
        _emit(repr(pc), output)


@main.command("pluecker")
@click.option("--which", type=click.Choice(["s2", "c2"]), required=True)
@click.option("--m", type=int, required=True)
@_descriptor_option
@_output_option
def pluecker_cmd(which, m, descriptor, output):
    """Closed contact formulas, cross-checked against their recursions."""
    fam = _family(descriptor)
    value = pluecker_s2(fam, m) if which == "s2" else pluecker_c2(fam, m)
    _emit(_alias_l2(value), output)


@main.command("trisecants")
@click.option("--d", type=str, default=None)
@click.option("--g", type=str, default=None)
@click.option("--b", type=str, default=None)
@click.option("--lomega", type=str, default=None)
@click.option("--omega2", type=str, default=None)
@click.option("--sigma", type=str, default=None)
@click.option("--single-curve", is_flag=True,
              help="virtual trisecant-scroll degree of one space curve")
@_output_option
def trisecants_cmd(d, g, b, lomega, omega2, sigma, single_curve, output):
    """Trisecant counts from the degeneracy combination of Chern numbers."""
    chars = {}
    if d is not None:
        chars["d"] = CharPoly.const(Fraction(d))
    if g is not None:
        chars["twogm2"] = CharPoly.const(2 * Fraction(g) - 2)
    for key, value in (("b", b), ("Lomega", lomega), ("omega2", omega2)):
        if value is not None:
            chars[key] = CharPoly.const(Fraction(value))
    if single_curve:
        _emit(str(chern_mod.single_curve_trisecant_scroll(chars)), output)
        return
    nodes = []
    if sigma is not None:
        nodes.append(Node("s", CharPoly.const(Fraction(sigma)), tau_L=CharPoly.const(0)))
    else:
        nodes.append(Node("s", CharPoly.symbol("sigma"), tau_L=CharPoly.const(0)))
    fam = FamilyDescriptor(1, chars=chars, nodes=nodes, label="cli")
    _emit(str(chern_mod.trisecant_count(fam)), output)


@main.command("double-points")
@click.option("--n", type=int, required=True, help="dimension of the projective target")
@click.option("--push-to-base", is_flag=True)
@_descriptor_option
@_output_option
def double_points_cmd(n, push_to_base, descriptor, output):
    """Virtual double-point class for a fiberwise map to projective n-space."""
    from .tautmod import pushforward_to_base

    fam = _family(descriptor)
    cls = chern_mod.double_point_class(fam, chern_mod.projective_target(n))
    if push_to_base:
        interior, boundary = pushforward_to_base(cls)
        _emit({"interior": str(interior), "boundary": str(boundary)}, output)
    elif n == fam.dim_b + 2:
        _emit(str(integrate(cls)), output)
    else:
        _emit(to_data(cls) if output == "json" else cls.render(), output)


@main.command("oracle-check")
@click.option("--cases", type=int, default=50)
@click.option("--seed", type=int, default=0)
@_output_option
def oracle_check_cmd(cases, seed, output):
    """Randomized agreement checks between the engine and the ordered model."""
    import random

    from .basering import make_total_space_ring
    from .tensym import TensorClass, discriminant_op, u_omega_total
    from .oracle import OrderedTensor, ordered_disc, symmetrize

    rng = random.Random(seed)
    ring = make_total_space_ring(1)
    gens = [BaseClass.unit(ring), BaseClass.gen(ring, "L"), BaseClass.gen(ring, "omega")]
    failures = 0
    for _ in range(cases):
        m = rng.randint(2, 5)
        classes = []
        for _ in range(m):
            cls = BaseClass.zero(ring)
            for g in gens:
                cls = cls + g * Fraction(rng.randint(-2, 2))
            classes.append(cls)
        t_ord = OrderedTensor.pure(ring, classes)
        lhs = symmetrize(ordered_disc(t_ord))
        t_ts = TensorClass.simple(ring, [(1, c) for c in classes])
        rhs = (discriminant_op(t_ts) - u_omega_total(t_ts)).terms
        if lhs != rhs:
            failures += 1
    result = {"cases": cases, "failures": failures}
    _emit(result, output)
    if failures:
        raise click.ClickException("oracle disagreement")


def run():
    try:
        main(standalone_mode=False)
    except DescriptorError as exc:
        click.echo("descriptor error: %s" % exc, err=True)
        sys.exit(1)
    except click.ClickException as exc:
        exc.show()
        sys.exit(1)
    except click.exceptions.Abort:
        sys.exit(1)
    except Exception as exc:  # engine errors
        click.echo("engine error: %s" % exc, err=True)
        sys.exit(2)


if __name__ == "__main__":
    run()
