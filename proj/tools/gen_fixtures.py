#!/usr/bin/env python3
"""Generates the structural Verilog fixture designs under tests/fixtures."""

import pathlib
import sys


class Module:
    def __init__(self, name):
        self.name = name
        self.inputs = []
        self.outputs = []
        self.wires = []
        self.lines = []
        self.count = 0

    def inp(self, name):
        self.inputs.append(name)
        return name

    def wire(self, expr):
        name = f"n{self.count}"
        self.count += 1
        self.wires.append(name)
        self.lines.append(f"  assign {name} = {expr};")
        return name

    def out(self, name, expr):
        self.outputs.append(name)
        self.lines.append(f"  assign {name} = {expr};")

    def text(self):
        ports = ", ".join(self.inputs + self.outputs)
        body = [f"module {self.name} ({ports});",
                f"  input {', '.join(self.inputs)};",
                f"  output {', '.join(self.outputs)};"]
        if self.wires:
            body.append(f"  wire {', '.join(self.wires)};")
        return "\n".join(body + self.lines + ["endmodule", ""])


def full_adder(m, a, b, c):
    t = m.wire(f"{a} ^ {b}")
    s = m.wire(f"{t} ^ {c}")
    co = m.wire(f"({a} & {b}) | ({t} & {c})")
    return s, co


def adder5():
    m = Module("adder5")
    a = [m.inp(f"a{i}") for i in range(5)]
    b = [m.inp(f"b{i}") for i in range(5)]
    c = m.inp("cin")
    for i in range(5):
        s, c = full_adder(m, a[i], b[i], c)
        m.out(f"s{i}", s)
    m.out("cout", c)
    return m


def mult3():
    m = Module("mult3")
    a = [m.inp(f"a{i}") for i in range(3)]
    b = [m.inp(f"b{i}") for i in range(3)]
    pp = [[m.wire(f"{a[i]} & {b[j]}") for i in range(3)] for j in range(3)]
    # columns of partial products reduced with ripple adders
    m.out("p0", pp[0][0])
    s1, c1 = m.wire(f"{pp[0][1]} ^ {pp[1][0]}"), m.wire(f"{pp[0][1]} & {pp[1][0]}")
    m.out("p1", s1)
    s2a, c2a = full_adder(m, pp[0][2], pp[1][1], pp[2][0])
    s2, c2b = m.wire(f"{s2a} ^ {c1}"), m.wire(f"{s2a} & {c1}")
    m.out("p2", s2)
    s3a, c3a = full_adder(m, pp[1][2], pp[2][1], c2a)
    s3, c3b = m.wire(f"{s3a} ^ {c2b}"), m.wire(f"{s3a} & {c2b}")
    m.out("p3", s3)
    s4a, c4a = full_adder(m, pp[2][2], c3a, c3b)
    m.out("p4", s4a)
    m.out("p5", c4a)
    return m


def cmp6():
    m = Module("cmp6")
    a = [m.inp(f"a{i}") for i in range(6)]
    b = [m.inp(f"b{i}") for i in range(6)]
    gt, eq = None, None
    for i in reversed(range(6)):
        g = m.wire(f"{a[i]} & ~{b[i]}")
        e = m.wire(f"~({a[i]} ^ {b[i]})")
        if gt is None:
            gt, eq = g, e
        else:
            gt = m.wire(f"{gt} | ({eq} & {g})")
            eq = m.wire(f"{eq} & {e}")
    m.out("gt", gt)
    m.out("eq", eq)
    m.out("lt", f"~({gt} | {eq})")
    return m


def alu4():
    m = Module("alu4")
    a = [m.inp(f"a{i}") for i in range(4)]
    b = [m.inp(f"b{i}") for i in range(4)]
    op0, op1 = m.inp("op0"), m.inp("op1")
    sub = m.wire(f"{op0} & {op1}")
    c = sub
    for i in range(4):
        bb = m.wire(f"{b[i]} ^ {sub}")
        s, c = full_adder(m, a[i], bb, c)
        land = m.wire(f"{a[i]} & {b[i]}")
        lor = m.wire(f"{a[i]} | {b[i]}")
        lxor = m.wire(f"{a[i]} ^ {b[i]}")
        logic = m.wire(f"({op0} & {lor}) | (~{op0} & {land})")
        arith = m.wire(f"({op0} & {lxor}) | (~{op0} & {s})")
        m.out(f"y{i}", f"({op1} & {logic}) | (~{op1} & {arith})")
    m.out("cout", f"~{op1} & {c}")
    return m


def prio12():
    m = Module("prio12")
    r = [m.inp(f"r{i}") for i in range(12)]
    # highest index wins
    above = [None] * 12
    none_above = None
    for i in reversed(range(12)):
        above[i] = none_above
        none_above = m.wire(f"~{r[i]}") if none_above is None else m.wire(f"{none_above} & ~{r[i]}")
    grant = []
    for i in range(12):
        grant.append(r[i] if above[i] is None else m.wire(f"{r[i]} & {above[i]}"))
    for bit in range(4):
        terms = [grant[i] for i in range(12) if (i >> bit) & 1]
        m.out(f"idx{bit}", " | ".join(terms))
    m.out("valid", f"~{none_above}")
    return m


def main():
    target = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else pathlib.Path(__file__).resolve().parent.parent / "tests" / "fixtures"
    target.mkdir(parents=True, exist_ok=True)
    for build in (adder5, mult3, cmp6, alu4, prio12):
        m = build()
        (target / f"{m.name}.v").write_text(m.text())


if __name__ == "__main__":
    main()
