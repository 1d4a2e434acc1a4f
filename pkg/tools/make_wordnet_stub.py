#!/usr/bin/env python3
"""Regenerate the synthetic lexicon fixture under tests/data/wordnet_stub.

The fixture mimics a WordNet 3.x WNDB distribution closely enough to
exercise a real parser: fixed-width decimal byte offsets that equal the
true position of each record, 29-line license-style headers, hypernym
(``@``/``@i``) and similar-to (``&``) pointers plus a sprinkling of other
pointer types that readers must skip, verb sentence frames, alphabetized
index files and morphy exception lists.

Run from anywhere; writes relative to the repository root.  The synset
inventory is hand-designed to cover the vocabulary of the bundled toy
corpora, so regenerating after edits keeps the corpus and the lexicon in
step.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

OUT_DIR = Path(__file__).resolve().parent.parent / "tests" / "data" / "wordnet_stub"

LEX_FILENUM = {"n": 6, "v": 30, "a": 0, "s": 0, "r": 2}

# ss_type 's' (adjective satellite) lives in the adj file and resolves to
# POS letter 'a' everywhere a pointer or index entry names it.
FILE_OF = {"n": "noun", "v": "verb", "a": "adj", "s": "adj", "r": "adv"}
LETTER_OF = {"n": "n", "v": "v", "a": "a", "s": "a", "r": "r"}


@dataclass
class Syn:
    key: str
    ss_type: str
    lemmas: tuple[str, ...]
    pointers: list[tuple[str, str, str]] = field(default_factory=list)


SYNS: list[Syn] = []
BY_KEY: dict[str, Syn] = {}


def add(key: str, ss_type: str, lemmas: list[str], hypernyms: list[str]) -> Syn:
    if key in BY_KEY:
        raise SystemExit(f"duplicate synset key {key}")
    syn = Syn(key, ss_type, tuple(lemmas))
    SYNS.append(syn)
    BY_KEY[key] = syn
    for h in hypernyms:
        link(key, "@", h)
        link(h, "~", key)
    return syn


def link(src: str, symbol: str, dst: str, src_tgt: str = "0000") -> None:
    BY_KEY[src].pointers.append((symbol, dst, src_tgt))


def n(key: str, lemmas: list[str], *hypernyms: str) -> Syn:
    return add(key, "n", lemmas, list(hypernyms))


def v(key: str, lemmas: list[str], *hypernyms: str) -> Syn:
    return add(key, "v", lemmas, list(hypernyms))


def a(key: str, lemmas: list[str]) -> Syn:
    return add(key, "a", lemmas, [])


def sat(key: str, lemmas: list[str], head: str) -> Syn:
    syn = add(key, "s", lemmas, [])
    link(head, "&", key)
    link(key, "&", head)
    return syn


def r(key: str, lemmas: list[str]) -> Syn:
    return add(key, "r", lemmas, [])


def define_synsets() -> None:
    # --- noun taxonomy -------------------------------------------------
    n("entity", ["entity"])
    n("physical_entity", ["physical_entity"], "entity")
    n("abstraction", ["abstraction", "abstract_entity"], "entity")
    n("object", ["object", "physical_object"], "physical_entity")
    n("matter", ["matter"], "physical_entity")
    n("phenomenon", ["phenomenon"], "physical_entity")

    n("artifact", ["artifact", "artefact"], "object")
    n("structure", ["structure", "construction_structure"], "artifact")
    n("bridge", ["bridge", "span"], "structure")
    n("deck", ["deck"], "structure")
    n("housing", ["housing", "lodging"], "structure")
    n("home", ["home", "dwelling", "domicile"], "housing")
    n("plant_works", ["plant", "works", "industrial_plant"], "structure")
    n("instrumentality", ["instrumentality", "instrumentation"], "artifact")
    n("conveyance", ["conveyance", "transport"], "instrumentality")
    n("vehicle", ["vehicle"], "conveyance")
    n("wheeled_vehicle", ["wheeled_vehicle"], "vehicle")
    n(
        "motor_vehicle",
        ["motor_vehicle", "automotive_vehicle"],
        "wheeled_vehicle",
    )
    n("car", ["car", "auto", "automobile", "machine", "motorcar"], "motor_vehicle")
    n("truck", ["truck", "motortruck"], "motor_vehicle")
    n("bus", ["bus", "autobus", "motorbus"], "motor_vehicle")
    n("craft", ["craft"], "vehicle")
    n("vessel", ["vessel", "watercraft"], "craft")
    n("ferry", ["ferry", "ferryboat"], "vessel")
    n("device", ["device"], "instrumentality")
    n("battery", ["battery"], "device")
    n("panel", ["panel"], "device")
    n("grid", ["grid"], "device")
    n("way", ["way"], "artifact")
    n("road", ["road", "route"], "way")
    n("lane", ["lane"], "way")
    n("crossing", ["crossing"], "way")
    n("beam", ["beam"], "artifact")
    n("cable", ["cable"], "artifact")

    n("geological_formation", ["geological_formation", "formation"], "object")
    n("desert", ["desert"], "geological_formation")
    n("bank", ["bank"], "geological_formation")
    n("stream", ["stream", "watercourse"], "object")
    n("river", ["river"], "stream")
    n("green_river", ["green_river"])  # instance hypernym added below
    link("green_river", "@i", "river")
    link("river", "~i", "green_river")
    n("land", ["land", "ground", "soil"], "object")
    n("farm", ["farm"], "land")
    n("habitat", ["habitat"], "object")
    n("region", ["region"], "object")
    n("district", ["district", "territory"], "region")
    n("town", ["town"], "district")
    n("city", ["city", "metropolis"], "district")
    n("county", ["county"], "district")
    n("state", ["state", "province"], "district")
    n("crack", ["crack", "fissure"], "object")

    n("living_thing", ["living_thing"], "object")
    n("organism", ["organism", "being"], "living_thing")
    n("plant_flora", ["plant", "flora", "plant_life"], "living_thing")
    n("person", ["person", "individual", "soul"], "organism")
    n("worker", ["worker", "employee"], "person")
    n("engineer", ["engineer", "applied_scientist"], "worker")
    n("official", ["official", "functionary"], "person")
    n("mayor", ["mayor"], "official")
    n("judge", ["judge", "justice"], "official")
    n("resident", ["resident", "occupant"], "person")
    n("farmer", ["farmer", "granger"], "person")
    n("commuter", ["commuter"], "person")
    n("owner", ["owner", "proprietor"], "person")
    n("child", ["child", "kid"], "person")
    n("man", ["man", "adult_male"], "person")
    n("animal", ["animal", "beast"], "organism")
    n("mammal", ["mammal"], "animal")
    n("carnivore", ["carnivore"], "mammal")
    n("feline", ["feline", "felid"], "carnivore")
    n("cat", ["cat", "true_cat"], "feline")
    n("reptile", ["reptile"], "animal")
    n("tortoise", ["tortoise"], "reptile")
    n("bird", ["bird"], "animal")

    n("substance", ["substance"], "matter")
    n("water", ["water"], "substance")
    n("steel", ["steel"], "substance")
    n("coal", ["coal"], "substance")
    n("dust", ["dust"], "substance")
    n("rust", ["rust"], "substance")

    n("act", ["act", "deed"], "abstraction")
    n("work", ["work"], "act")
    n("repair_act", ["repair", "fix", "mend"], "work")
    n("inspection", ["inspection", "review"], "act")
    n("construction", ["construction"], "act")
    n("protest_act", ["protest", "dissent"], "act")
    n("closure", ["closure", "closing"], "act")
    n("trade", ["trade", "commerce"], "act")
    n("deal", ["deal", "transaction"], "trade")
    n("business", ["business"], "trade")
    n("proceeding", ["proceeding", "legal_proceeding"], "act")
    n("lawsuit", ["lawsuit", "suit"], "proceeding")
    n("hearing", ["hearing"], "proceeding")
    n("delay", ["delay", "holdup"], "act")
    n("dispute", ["dispute", "difference_of_opinion"], "act")
    n("traffic", ["traffic"], "act")
    n("job", ["job", "task"], "act")
    n("use_act", ["use", "usage"], "act")
    n("demand", ["demand"], "act")
    n("project", ["project", "undertaking"], "act")
    n("rush", ["rush"], "act")
    n("harm", ["harm", "injury"], "act")

    n("attribute", ["attribute"], "abstraction")
    n("condition", ["condition", "status"], "attribute")
    n("safety", ["safety"], "attribute")
    n("speed", ["speed", "velocity"], "attribute")
    n("limit", ["limit", "bound"], "attribute")
    n("peak", ["peak", "extremum"], "attribute")

    n("measure", ["measure", "quantity"], "abstraction")
    n("acre", ["acre"], "measure")
    n("foot", ["foot"], "measure")
    n("rate", ["rate", "charge_per_unit"], "measure")
    n("monetary_unit", ["monetary_unit"], "measure")
    n("dollar", ["dollar"], "monetary_unit")
    n("number", ["number"], "measure")
    n("million", ["million"], "number")
    n("thousand", ["thousand", "grand"], "number")
    n("time_unit", ["time_unit"], "measure")
    n("hour", ["hour", "hr"], "time_unit")
    n("day", ["day"], "time_unit")
    n("month", ["month"], "time_unit")
    n("year", ["year", "yr"], "time_unit")
    n("time_period", ["time_period", "period"], "measure")
    n("morning", ["morning", "forenoon"], "time_period")
    n("evening", ["evening", "eve"], "time_period")
    n("summer", ["summer", "summertime"], "time_period")
    n("spring", ["spring", "springtime"], "time_period")

    n("communication", ["communication"], "abstraction")
    n("report", ["report", "account"], "communication")
    n("finding", ["finding"], "communication")
    n("plan_idea", ["plan", "program"], "communication")
    n("permit", ["permit", "license"], "communication")

    n("group", ["group", "grouping"], "abstraction")
    n("organization", ["organization", "organisation"], "group")
    n("council", ["council"], "organization")
    n("company", ["company", "firm"], "organization")
    n("utility", ["utility", "public_utility"], "company")
    n("crew", ["crew", "gang"], "group")

    n("possession", ["possession"], "abstraction")
    n("fund", ["fund", "stock"], "possession")
    n("good_commodity", ["good", "commodity"], "possession")

    n("energy", ["energy"], "phenomenon")
    n("electricity", ["electricity"], "energy")
    n("power", ["power"], "energy")
    n("noise", ["noise"], "phenomenon")

    n("direction", ["direction"], "abstraction")
    n("west", ["west"], "direction")

    # part-of pointers, ignored by similarity code but parsed
    link("deck", "%p", "bridge")
    link("bridge", "#p", "deck")

    # --- verbs ----------------------------------------------------------
    v("move_v", ["move", "displace"])
    v("travel_v", ["travel", "journey"], "move_v")
    v("cross_v", ["cross", "traverse"], "travel_v")
    v("run_fast_v", ["run"], "travel_v")
    v("carry_v", ["carry", "transport"], "move_v")
    v("lower_v", ["lower", "take_down"], "move_v")
    v("slow_v", ["slow", "decelerate"], "move_v")

    v("make_v", ["make", "create"])
    v("build_v", ["build", "construct"], "make_v")
    v("fix_v", ["fix", "repair", "mend"], "make_v")

    v("keep_v", ["keep", "hold_on"])
    v("store_v", ["store", "stash"], "keep_v")

    v("communicate_v", ["communicate", "intercommunicate"])
    v("say_v", ["say", "tell"], "communicate_v")
    v("describe_v", ["describe", "depict"], "say_v")
    v("explain_v", ["explain", "explicate"], "say_v")
    v("warn_v", ["warn"], "communicate_v")
    v("ask_v", ["ask", "enquire"], "communicate_v")
    v("protest_v", ["protest", "object"], "communicate_v")
    v("sign_v", ["sign"], "communicate_v")
    v("vote_v", ["vote"], "communicate_v")
    v("file_v", ["file", "register"], "communicate_v")

    v("think_v", ["think", "cogitate"])
    v("plan_v", ["plan", "design"], "think_v")
    v("fear_v", ["fear", "dread"], "think_v")
    v("worry_v", ["worry", "care"], "think_v")
    v("want_v", ["want", "desire"], "think_v")
    v("approve_v", ["approve", "sanction"], "think_v")
    v("reject_v", ["reject", "refuse"], "think_v")
    v("find_v", ["find", "discover"], "think_v")

    v("change_v", ["change", "alter"])
    v("close_v", ["close", "shut"], "change_v")
    v("begin_v", ["begin", "start", "commence"], "change_v")
    v("grow_v", ["grow"], "change_v")
    v("cut_v", ["cut", "reduce"], "change_v")
    v("replace_v", ["replace", "supplant"], "change_v")
    v("cover_v", ["cover"], "change_v")
    v("block_v", ["block", "halt"], "change_v")
    v("fail_v", ["fail", "go_bad"], "change_v")
    v("hurt_v", ["hurt", "injure"], "change_v")

    v("transfer_v", ["transfer"])
    v("pay_v", ["pay"], "transfer_v")
    v("buy_v", ["buy", "purchase"], "transfer_v")
    v("supply_v", ["supply", "provide"], "transfer_v")
    v("take_v", ["take"], "transfer_v")
    v("cost_v", ["cost"], "transfer_v")

    v("meet_v", ["meet", "get_together"])
    v("wait_v", ["wait"])

    v("analyze_v", ["analyze", "study"])
    v("inspect_v", ["inspect", "examine"], "analyze_v")
    v("review_v", ["review", "critique"], "analyze_v")

    v("operate_v", ["operate", "run"])

    # --- adjectives: heads ('a') with satellite clusters ('s') ----------
    a("large_a", ["large", "big"])
    sat("vast_s", ["vast", "huge"], "large_a")
    a("old_a", ["old"])
    sat("aged_s", ["aged"], "old_a")
    a("new_a", ["new", "fresh"])
    link("old_a", "!", "new_a", "0101")
    link("new_a", "!", "old_a", "0101")
    link("old_a", "^", "aged_s")
    a("heavy_a", ["heavy"])
    sat("weighty_s", ["weighty"], "heavy_a")
    a("cheap_a", ["cheap", "inexpensive"])
    a("deep_a", ["deep"])
    a("scarce_a", ["scarce"])
    sat("rare_s", ["rare"], "scarce_a")
    a("main_a", ["main", "chief", "principal"])
    a("long_a", ["long"])
    a("green_a", ["green"])
    a("safe_a", ["safe"])
    link("safe_a", "+", "safety", "0101")
    link("safety", "+", "safe_a", "0101")
    a("solar_a", ["solar"])
    a("next_a", ["next"])
    a("slow_a", ["slow"])
    link("slow_a", "=", "speed")
    link("speed", "=", "slow_a")
    a("good_a", ["good"])
    sat("great_s", ["great"], "good_a")

    # --- adverbs ---------------------------------------------------------
    r("quickly_r", ["quickly", "rapidly"])
    r("soon_r", ["soon"])
    r("downstream_r", ["downstream"])
    r("well_r", ["well"])


EXCEPTIONS = {
    "noun": [
        ("children", "child"),
        ("feet", "foot"),
        ("men", "man"),
        ("people", "person"),
    ],
    "verb": [
        ("bought", "buy"),
        ("found", "find"),
        ("grew", "grow"),
        ("grown", "grow"),
        ("made", "make"),
        ("met", "meet"),
        ("paid", "pay"),
        ("ran", "run"),
        ("said", "say"),
        ("took", "take"),
    ],
    "adj": [("best", "good"), ("better", "good")],
    "adv": [("best", "well"), ("better", "well")],
}


def header_lines(name: str) -> list[str]:
    # License-style preamble: 29 lines, each starting with two spaces,
    # exactly like the files a real WNDB reader must skip.
    lines = [f"  {i:2d} synthetic lexicon fixture {name}" for i in range(1, 29)]
    lines.append("  29 end of preamble")
    return lines


def data_record(syn: Syn, offsets: dict[str, int]) -> str:
    parts = [
        f"{offsets[syn.key]:08d}",
        f"{LEX_FILENUM[syn.ss_type]:02d}",
        syn.ss_type,
        f"{len(syn.lemmas):02x}",
    ]
    for lemma in syn.lemmas:
        parts.extend([lemma, "0"])
    parts.append(f"{len(syn.pointers):03d}")
    for symbol, dst, src_tgt in syn.pointers:
        target = BY_KEY[dst]
        parts.extend(
            [symbol, f"{offsets[dst]:08d}", LETTER_OF[target.ss_type], src_tgt]
        )
    if FILE_OF[syn.ss_type] == "verb":
        parts.extend(["01", "+", "02", "00"])
    return " ".join(parts) + f" | gloss for {syn.lemmas[0]}  "


def build_files() -> dict[str, str]:
    by_file: dict[str, list[Syn]] = {"noun": [], "verb": [], "adj": [], "adv": []}
    for syn in SYNS:
        by_file[FILE_OF[syn.ss_type]].append(syn)

    # Fixed-width offset fields make record lengths independent of the
    # offset values, so a dummy pass yields the exact layout.
    dummy = {syn.key: 0 for syn in SYNS}
    offsets: dict[str, int] = {}
    for name, syns in by_file.items():
        pos = sum(len(line.encode()) + 1 for line in header_lines(f"data.{name}"))
        for syn in syns:
            offsets[syn.key] = pos
            pos += len(data_record(syn, dummy).encode()) + 1

    out: dict[str, str] = {}
    for name, syns in by_file.items():
        lines = header_lines(f"data.{name}")
        lines.extend(data_record(syn, offsets) for syn in syns)
        out[f"data.{name}"] = "\n".join(lines) + "\n"

    for name, syns in by_file.items():
        letter = {"noun": "n", "verb": "v", "adj": "a", "adv": "r"}[name]
        entries: dict[str, list[Syn]] = {}
        for syn in syns:
            for lemma in syn.lemmas:
                entries.setdefault(lemma, []).append(syn)
        lines = header_lines(f"index.{name}")
        for lemma in sorted(entries):
            syns_for = entries[lemma]
            symbols: list[str] = []
            for syn in syns_for:
                for symbol, _, _ in syn.pointers:
                    if symbol not in symbols:
                        symbols.append(symbol)
            parts = [lemma, letter, str(len(syns_for)), str(len(symbols))]
            parts.extend(symbols)
            parts.extend([str(len(syns_for)), "0"])
            parts.extend(f"{offsets[syn.key]:08d}" for syn in syns_for)
            lines.append(" ".join(parts) + "  ")
        out[f"index.{name}"] = "\n".join(lines) + "\n"

    for name, pairs in EXCEPTIONS.items():
        out[f"{name}.exc"] = "".join(
            f"{form} {lemma}\n" for form, lemma in sorted(pairs)
        )
    return out


def main() -> None:
    define_synsets()
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    files = build_files()
    for name, content in sorted(files.items()):
        (OUT_DIR / name).write_text(content, encoding="ascii")
    counts = {pos: 0 for pos in ("n", "v", "a", "r")}
    for syn in SYNS:
        counts[LETTER_OF[syn.ss_type]] += 1
    total = sum(counts.values())
    print(f"wrote {len(files)} files to {OUT_DIR}")
    print(f"synsets: {total} ({counts})")


if __name__ == "__main__":
    main()
