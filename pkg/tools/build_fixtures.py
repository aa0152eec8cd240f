#!/usr/bin/env python3
"""Regenerate the hand-built fixture corpora under tests/fixtures/.

Every tree and every expected annotation below was authored by hand; the
expected values are the oracle the test suite checks the pipeline
against, so they must never be produced by running the pipeline itself.
The only generated artefacts are the pre-annotated files consumed by the
embedding exporter's tests, which exist to exercise the wire format.

Run from the repository root:  python tools/build_fixtures.py
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "tests" / "fixtures"


def t(form, lemma, upos, head, deprel, feats="_"):
    return (form, lemma, upos, feats, head, deprel)


def render_doc(doc_id, sentences):
    blocks = []
    for index, (sent_id, rows) in enumerate(sentences):
        lines = []
        if index == 0:
            lines.append(f"# newdoc id = {doc_id}")
        lines.append(f"# sent_id = {sent_id}")
        lines.append("# text = " + " ".join(r[0] for r in rows))
        for i, (form, lemma, upos, feats, head, deprel) in enumerate(rows, start=1):
            lines.append(
                f"{i}\t{form}\t{lemma}\t{upos}\t_\t{feats}\t{head}\t{deprel}\t_\t_"
            )
        blocks.append("\n".join(lines) + "\n")
    return "\n".join(blocks) + "\n" if blocks else ""


def ok(theme, rheme, markedness, modality, rule):
    return {
        "status": "ok",
        "theme": sorted(theme),
        "rheme": sorted(rheme),
        "markedness": markedness,
        "modality": modality,
        "rule": rule,
    }


NO_THEME = {"status": "no_theme"}
REJECTED = {"status": "rejected"}


# ---------------------------------------------------------------- corpus --

CORPUS = {}

CORPUS["decl"] = [
    ("d1", [t("Juan", "Juan", "PROPN", 2, "SBJ"), t("llegó", "llegar", "VERB", 0, "ROOT"),
            t("tarde", "tarde", "ADV", 2, "ADV"), t(".", ".", "PUNCT", 2, "PUNCT")],
     ok([1], [2, 3, 4], "unmarked", "factual", "theme_sbj")),
    ("d2", [t("El", "el", "DET", 2, "SPEC"), t("presidente", "presidente", "NOUN", 3, "SBJ"),
            t("aprobó", "aprobar", "VERB", 0, "ROOT"), t("una", "uno", "DET", 5, "SPEC"),
            t("reforma", "reforma", "NOUN", 3, "DO"), t(".", ".", "PUNCT", 3, "PUNCT")],
     ok([1, 2], [3, 4, 5, 6], "unmarked", "factual", "theme_sbj")),
    ("d3", [t("La", "el", "DET", 2, "SPEC"), t("empresa", "empresa", "NOUN", 3, "SBJ"),
            t("construyó", "construir", "VERB", 0, "ROOT"), t("un", "uno", "DET", 5, "SPEC"),
            t("puente", "puente", "NOUN", 3, "DO"), t("enorme", "enorme", "ADJ", 5, "MOD"),
            t(".", ".", "PUNCT", 3, "PUNCT")],
     ok([1, 2], [3, 4, 5, 6, 7], "unmarked", "factual", "theme_sbj")),
    ("d4", [t("Luis", "Luis", "PROPN", 3, "SBJ"), t("fue", "ser", "AUX", 3, "AUX"),
            t("acompañado", "acompañar", "VERB", 0, "ROOT"), t("hoy", "hoy", "ADV", 3, "ADV"),
            t("por", "por", "ADP", 6, "CASE"), t("Jo", "Jo", "PROPN", 3, "AGT"),
            t(".", ".", "PUNCT", 3, "PUNCT")],
     ok([1], [2, 3, 4, 5, 6, 7], "unmarked", "factual", "theme_sbj")),
    ("d5", [t("Pedro", "Pedro", "PROPN", 2, "SBJ"), t("acompañó", "acompañar", "VERB", 0, "ROOT"),
            t("a", "a", "ADP", 4, "CASE"), t("Luis", "Luis", "PROPN", 2, "DO"),
            t("hoy", "hoy", "ADV", 2, "ADV"), t(".", ".", "PUNCT", 2, "PUNCT")],
     ok([1], [2, 3, 4, 5, 6], "unmarked", "factual", "theme_sbj")),
    ("d6", [t("Los", "el", "DET", 2, "SPEC"), t("niños", "niño", "NOUN", 6, "SBJ"),
            t("y", "y", "CCONJ", 5, "COORD"), t("las", "el", "DET", 5, "SPEC"),
            t("niñas", "niña", "NOUN", 2, "CONJ"), t("cantaron", "cantar", "VERB", 0, "ROOT"),
            t(".", ".", "PUNCT", 6, "PUNCT")],
     ok([1, 2, 3, 4, 5], [6, 7], "unmarked", "factual", "theme_sbj")),
    ("d7", [t("María", "María", "PROPN", 4, "SBJ"), t("y", "y", "CCONJ", 3, "COORD"),
            t("Pedro", "Pedro", "PROPN", 1, "CONJ"), t("compraron", "comprar", "VERB", 0, "ROOT"),
            t("la", "el", "DET", 6, "SPEC"), t("casa", "casa", "NOUN", 4, "DO"),
            t("vieja", "viejo", "ADJ", 6, "MOD"), t(".", ".", "PUNCT", 4, "PUNCT")],
     ok([1, 2, 3], [4, 5, 6, 7, 8], "unmarked", "factual", "theme_sbj")),
    ("d8", [t("El", "el", "DET", 2, "SPEC"), t("perro", "perro", "NOUN", 3, "SBJ"),
            t("duerme", "dormir", "VERB", 0, "ROOT"), t(".", ".", "PUNCT", 3, "PUNCT")],
     ok([1, 2], [3, 4], "unmarked", "factual", "theme_sbj")),
    ("d9", [t("La", "el", "DET", 2, "SPEC"), t("profesora", "profesor", "NOUN", 3, "SBJ"),
            t("explicó", "explicar", "VERB", 0, "ROOT"), t("la", "el", "DET", 5, "SPEC"),
            t("lección", "lección", "NOUN", 3, "DO"), t(".", ".", "PUNCT", 3, "PUNCT")],
     ok([1, 2], [3, 4, 5, 6], "unmarked", "reported", "theme_sbj")),
    ("d10", [t("El", "el", "DET", 2, "SPEC"), t("coche", "coche", "NOUN", 3, "SBJ"),
             t("es", "ser", "AUX", 0, "ROOT"), t("rojo", "rojo", "ADJ", 3, "ATR"),
             t(".", ".", "PUNCT", 3, "PUNCT")],
     ok([1, 2], [3, 4, 5], "unmarked", "factual", "theme_sbj")),
    ("d11", [t("Las", "el", "DET", 2, "SPEC"), t("casas", "casa", "NOUN", 5, "SBJ"),
             t("del", "del", "ADP", 4, "CASE"), t("pueblo", "pueblo", "NOUN", 2, "MOD"),
             t("son", "ser", "AUX", 0, "ROOT"), t("blancas", "blanco", "ADJ", 5, "ATR"),
             t(".", ".", "PUNCT", 5, "PUNCT")],
     ok([1, 2, 3, 4], [5, 6, 7], "unmarked", "factual", "theme_sbj")),
    ("d12", [t("Juan", "Juan", "PROPN", 2, "SBJ"), t("escribió", "escribir", "VERB", 0, "ROOT"),
             t("una", "uno", "DET", 4, "SPEC"), t("carta", "carta", "NOUN", 2, "DO"),
             t("a", "a", "ADP", 6, "CASE"), t("María", "María", "PROPN", 2, "IO"),
             t(".", ".", "PUNCT", 2, "PUNCT")],
     ok([1], [2, 3, 4, 5, 6, 7], "unmarked", "factual", "theme_sbj")),
    ("d13", [t("El", "el", "DET", 2, "SPEC"), t("tren", "tren", "NOUN", 4, "SBJ"),
             t("moderno", "moderno", "ADJ", 2, "MOD"), t("llegó", "llegar", "VERB", 0, "ROOT"),
             t("a", "a", "ADP", 7, "CASE"), t("la", "el", "DET", 7, "SPEC"),
             t("estación", "estación", "NOUN", 4, "ADV"), t(".", ".", "PUNCT", 4, "PUNCT")],
     ok([1, 2, 3], [4, 5, 6, 7, 8], "unmarked", "factual", "theme_sbj")),
    ("d14", [t("Los", "el", "DET", 2, "SPEC"), t("obreros", "obrero", "NOUN", 3, "SBJ"),
             t("terminaron", "terminar", "VERB", 0, "ROOT"), t("el", "el", "DET", 5, "SPEC"),
             t("trabajo", "trabajo", "NOUN", 3, "DO"), t("ayer", "ayer", "ADV", 3, "ADV"),
             t(".", ".", "PUNCT", 3, "PUNCT")],
     ok([1, 2], [3, 4, 5, 6, 7], "unmarked", "factual", "theme_sbj")),
    ("d15", [t("Ella", "él", "PRON", 2, "SBJ"), t("preparó", "preparar", "VERB", 0, "ROOT"),
             t("la", "el", "DET", 4, "SPEC"), t("cena", "cena", "NOUN", 2, "DO"),
             t(".", ".", "PUNCT", 2, "PUNCT")],
     ok([1], [2, 3, 4, 5], "unmarked", "factual", "theme_sbj")),
]

CORPUS["marcadas"] = [
    ("m1", [t("Hoy", "hoy", "ADV", 3, "ADV"), t("Pedro", "Pedro", "PROPN", 3, "SBJ"),
            t("acompañó", "acompañar", "VERB", 0, "ROOT"), t("a", "a", "ADP", 5, "CASE"),
            t("Luis", "Luis", "PROPN", 3, "DO"), t(".", ".", "PUNCT", 3, "PUNCT")],
     ok([1], [2, 3, 4, 5, 6], "marked", "factual", "marked_adjunct")),
    ("m2", [t("Ayer", "ayer", "ADV", 4, "ADV"), t("la", "el", "DET", 3, "SPEC"),
            t("bolsa", "bolsa", "NOUN", 4, "SBJ"), t("subió", "subir", "VERB", 0, "ROOT"),
            t(".", ".", "PUNCT", 4, "PUNCT")],
     ok([1], [2, 3, 4, 5], "marked", "factual", "marked_adjunct")),
    ("m3", [t("En", "en", "ADP", 2, "CASE"), t("Madrid", "Madrid", "PROPN", 5, "ADV"),
            t("la", "el", "DET", 4, "SPEC"), t("gente", "gente", "NOUN", 5, "SBJ"),
            t("cena", "cenar", "VERB", 0, "ROOT"), t("tarde", "tarde", "ADV", 5, "ADV"),
            t(".", ".", "PUNCT", 5, "PUNCT")],
     ok([1, 2], [3, 4, 5, 6, 7], "marked", "factual", "marked_adjunct")),
    ("m4", [t("Mañana", "mañana", "ADV", 4, "ADV"), t("el", "el", "DET", 3, "SPEC"),
            t("equipo", "equipo", "NOUN", 4, "SBJ"), t("viajará", "viajar", "VERB", 0, "ROOT"),
            t("a", "a", "ADP", 6, "CASE"), t("Sevilla", "Sevilla", "PROPN", 4, "ADV"),
            t(".", ".", "PUNCT", 4, "PUNCT")],
     ok([1], [2, 3, 4, 5, 6, 7], "marked", "factual", "marked_adjunct")),
    ("m5", [t("Por", "por", "ADP", 3, "CASE"), t("la", "el", "DET", 3, "SPEC"),
            t("noche", "noche", "NOUN", 6, "ADV"), t("los", "el", "DET", 5, "SPEC"),
            t("gatos", "gato", "NOUN", 6, "SBJ"), t("cazan", "cazar", "VERB", 0, "ROOT"),
            t(".", ".", "PUNCT", 6, "PUNCT")],
     ok([1, 2, 3], [4, 5, 6, 7], "marked", "factual", "marked_adjunct")),
    ("m6", [t("Ahora", "ahora", "ADV", 4, "ADV"), t("la", "el", "DET", 3, "SPEC"),
            t("situación", "situación", "NOUN", 4, "SBJ"), t("mejora", "mejorar", "VERB", 0, "ROOT"),
            t(".", ".", "PUNCT", 4, "PUNCT")],
     ok([1], [2, 3, 4, 5], "marked", "factual", "marked_adjunct")),
]

CORPUS["hendidas"] = [
    ("h1", [t("Fue", "ser", "AUX", 0, "ROOT"), t("Pedro", "Pedro", "PROPN", 1, "ATR"),
            t("quien", "quien", "PRON", 5, "SBJ", "PronType=Rel"), t("me", "yo", "PRON", 5, "IO"),
            t("mintió", "mentir", "VERB", 1, "REL"), t(".", ".", "PUNCT", 1, "PUNCT")],
     ok([2], [1, 3, 4, 5, 6], "thematized", "factual", "cleft_focus")),
    ("h2", [t("Fue", "ser", "AUX", 0, "ROOT"), t("María", "María", "PROPN", 1, "ATR"),
            t("quien", "quien", "PRON", 4, "SBJ", "PronType=Rel"), t("ganó", "ganar", "VERB", 1, "REL"),
            t("el", "el", "DET", 6, "SPEC"), t("premio", "premio", "NOUN", 4, "DO"),
            t(".", ".", "PUNCT", 1, "PUNCT")],
     ok([2], [1, 3, 4, 5, 6, 7], "thematized", "factual", "cleft_focus")),
    ("h3", [t("Es", "ser", "AUX", 0, "ROOT"), t("el", "el", "DET", 3, "SPEC"),
            t("director", "director", "NOUN", 1, "ATR"), t("quien", "quien", "PRON", 5, "SBJ", "PronType=Rel"),
            t("decide", "decidir", "VERB", 1, "REL"), t(".", ".", "PUNCT", 1, "PUNCT")],
     ok([2, 3], [1, 4, 5, 6], "thematized", "factual", "cleft_focus")),
    ("h4", [t("Fue", "ser", "AUX", 0, "ROOT"), t("en", "en", "ADP", 3, "CASE"),
            t("Madrid", "Madrid", "PROPN", 1, "ATR"), t("donde", "donde", "ADV", 5, "ADV", "PronType=Rel"),
            t("ocurrió", "ocurrir", "VERB", 1, "REL"), t("el", "el", "DET", 7, "SPEC"),
            t("accidente", "accidente", "NOUN", 5, "SBJ"), t(".", ".", "PUNCT", 1, "PUNCT")],
     ok([2, 3], [1, 4, 5, 6, 7, 8], "thematized", "factual", "cleft_focus")),
    ("h5", [t("Fue", "ser", "AUX", 0, "ROOT"), t("ayer", "ayer", "ADV", 1, "ATR"),
            t("cuando", "cuando", "ADV", 4, "ADV", "PronType=Rel"), t("firmaron", "firmar", "VERB", 1, "REL"),
            t("el", "el", "DET", 6, "SPEC"), t("contrato", "contrato", "NOUN", 4, "DO"),
            t(".", ".", "PUNCT", 1, "PUNCT")],
     ok([2], [1, 3, 4, 5, 6, 7], "thematized", "factual", "cleft_focus")),
    ("h6", [t("El", "el", "DET", 2, "SPEC"), t("vino", "vino", "NOUN", 3, "SBJ"),
            t("es", "ser", "AUX", 0, "ROOT"), t("caro", "caro", "ADJ", 3, "ATR"),
            t(".", ".", "PUNCT", 3, "PUNCT")],
     ok([1, 2], [3, 4, 5], "unmarked", "factual", "theme_sbj")),
    ("h7", [t("La", "el", "DET", 2, "SPEC"), t("película", "película", "NOUN", 3, "SBJ"),
            t("fue", "ser", "AUX", 0, "ROOT"), t("aburrida", "aburrido", "ADJ", 3, "ATR"),
            t(".", ".", "PUNCT", 3, "PUNCT")],
     ok([1, 2], [3, 4, 5], "unmarked", "factual", "theme_sbj")),
    ("h8", [t("Los", "el", "DET", 2, "SPEC"), t("resultados", "resultado", "NOUN", 3, "SBJ"),
            t("son", "ser", "AUX", 0, "ROOT"), t("buenos", "bueno", "ADJ", 3, "ATR"),
            t(".", ".", "PUNCT", 3, "PUNCT")],
     ok([1, 2], [3, 4, 5], "unmarked", "factual", "theme_sbj")),
    ("h9", [t("Su", "su", "DET", 2, "SPEC"), t("hermano", "hermano", "NOUN", 3, "SBJ"),
            t("es", "ser", "AUX", 0, "ROOT"), t("médico", "médico", "NOUN", 3, "ATR"),
            t(".", ".", "PUNCT", 3, "PUNCT")],
     ok([1, 2], [3, 4, 5], "unmarked", "factual", "theme_sbj")),
    ("h10", [t("El", "el", "DET", 2, "SPEC"), t("problema", "problema", "NOUN", 3, "SBJ"),
             t("parece", "parecer", "VERB", 0, "ROOT"), t("grave", "grave", "ADJ", 3, "ATR"),
             t(".", ".", "PUNCT", 3, "PUNCT")],
     ok([1, 2], [3, 4, 5], "unmarked", "factual", "theme_sbj")),
]

CORPUS["interrogativas"] = [
    ("q1", [t("¿", "¿", "PUNCT", 3, "PUNCT"), t("Dónde", "dónde", "ADV", 3, "ADV", "PronType=Int"),
            t("está", "estar", "VERB", 0, "ROOT"), t("Berlín", "Berlín", "PROPN", 3, "SBJ"),
            t("?", "?", "PUNCT", 3, "PUNCT")],
     ok([2], [1, 3, 4, 5], "unmarked", "factual", "theme_wh_adv")),
    ("q2", [t("¿", "¿", "PUNCT", 3, "PUNCT"), t("Cuándo", "cuándo", "ADV", 3, "ADV", "PronType=Int"),
            t("llegará", "llegar", "VERB", 0, "ROOT"), t("el", "el", "DET", 5, "SPEC"),
            t("tren", "tren", "NOUN", 3, "SBJ"), t("?", "?", "PUNCT", 3, "PUNCT")],
     ok([2], [1, 3, 4, 5, 6], "unmarked", "factual", "theme_wh_adv")),
    ("q3", [t("¿", "¿", "PUNCT", 3, "PUNCT"), t("Qué", "qué", "PRON", 3, "DO", "PronType=Int"),
            t("compró", "comprar", "VERB", 0, "ROOT"), t("Juan", "Juan", "PROPN", 3, "SBJ"),
            t("?", "?", "PUNCT", 3, "PUNCT")],
     ok([2], [1, 3, 4, 5], "unmarked", "factual", "theme_wh_do")),
    ("q4", [t("¿", "¿", "PUNCT", 3, "PUNCT"), t("Quién", "quién", "PRON", 3, "SBJ", "PronType=Int"),
            t("rompió", "romper", "VERB", 0, "ROOT"), t("la", "el", "DET", 5, "SPEC"),
            t("ventana", "ventana", "NOUN", 3, "DO"), t("?", "?", "PUNCT", 3, "PUNCT")],
     ok([2], [1, 3, 4, 5, 6], "unmarked", "factual", "theme_wh_sbj")),
    ("q5", [t("¿", "¿", "PUNCT", 2, "PUNCT"), t("Vino", "venir", "VERB", 0, "ROOT"),
            t("Juan", "Juan", "PROPN", 2, "SBJ"), t("?", "?", "PUNCT", 2, "PUNCT")],
     ok([2], [1, 3, 4], "unmarked", "factual", "theme_yesno")),
    ("q6", [t("¿", "¿", "PUNCT", 2, "PUNCT"), t("Aprobó", "aprobar", "VERB", 0, "ROOT"),
            t("el", "el", "DET", 4, "SPEC"), t("gobierno", "gobierno", "NOUN", 2, "SBJ"),
            t("la", "el", "DET", 6, "SPEC"), t("ley", "ley", "NOUN", 2, "DO"),
            t("?", "?", "PUNCT", 2, "PUNCT")],
     ok([2], [1, 3, 4, 5, 6, 7], "unmarked", "factual", "theme_yesno")),
    ("q7", [t("¿", "¿", "PUNCT", 3, "PUNCT"), t("Hoy", "hoy", "ADV", 3, "ADV"),
            t("viene", "venir", "VERB", 0, "ROOT"), t("el", "el", "DET", 5, "SPEC"),
            t("médico", "médico", "NOUN", 3, "SBJ"), t("?", "?", "PUNCT", 3, "PUNCT")],
     ok([2], [1, 3, 4, 5, 6], "marked", "factual", "marked_adjunct")),
]

CORPUS["subordinadas"] = [
    ("s1", [t("Cuando", "cuando", "SCONJ", 2, "MARK"), t("tuvo", "tener", "VERB", 8, "ADVCL"),
            t("la", "el", "DET", 4, "SPEC"), t("oportunidad", "oportunidad", "NOUN", 2, "DO"),
            t(",", ",", "PUNCT", 2, "PUNCT"), t("el", "el", "DET", 7, "SPEC"),
            t("presidente", "presidente", "NOUN", 8, "SBJ"), t("declinó", "declinar", "VERB", 0, "ROOT"),
            t("comparecer", "comparecer", "VERB", 8, "CCOMP"), t(".", ".", "PUNCT", 8, "PUNCT")],
     ok([6, 7], [8, 9, 10], "unmarked", "factual", "theme_sbj")),
    ("s2", [t("Como", "como", "SCONJ", 4, "MARK"), t("los", "el", "DET", 3, "SPEC"),
            t("farmacéuticos", "farmacéutico", "NOUN", 4, "SBJ"), t("trabajan", "trabajar", "VERB", 14, "ADVCL"),
            t("con", "con", "ADP", 8, "CASE"), t("un", "uno", "DET", 8, "SPEC"),
            t("gran", "gran", "ADJ", 8, "MOD"), t("margen", "margen", "NOUN", 4, "ADV"),
            t(",", ",", "PUNCT", 4, "PUNCT"), t("la", "el", "DET", 11, "SPEC"),
            t("oportunidad", "oportunidad", "NOUN", 14, "SBJ"), t("de", "de", "ADP", 13, "CASE"),
            t("negocio", "negocio", "NOUN", 11, "MOD"), t("es", "ser", "AUX", 0, "ROOT"),
            t("enorme", "enorme", "ADJ", 14, "ATR"), t(".", ".", "PUNCT", 14, "PUNCT")],
     ok([10, 11, 12, 13], [14, 15, 16], "unmarked", "factual", "theme_sbj")),
    ("s3", [t("El", "el", "DET", 2, "SPEC"), t("factor", "factor", "NOUN", 4, "SBJ"),
            t("principal", "principal", "ADJ", 2, "MOD"), t("es", "ser", "AUX", 0, "ROOT"),
            t("que", "que", "SCONJ", 11, "MARK"), t("el", "el", "DET", 7, "SPEC"),
            t("consumo", "consumo", "NOUN", 11, "SBJ"), t("eléctrico", "eléctrico", "ADJ", 7, "MOD"),
            t("ya", "ya", "ADV", 11, "PART"), t("no", "no", "ADV", 11, "PART"),
            t("es", "ser", "AUX", 4, "CCOMP"), t("mucho", "mucho", "ADV", 13, "MOD"),
            t("menor", "menor", "ADJ", 11, "ATR"), t("durante", "durante", "ADP", 16, "CASE"),
            t("el", "el", "DET", 16, "SPEC"), t("verano", "verano", "NOUN", 11, "ADV"),
            t(".", ".", "PUNCT", 4, "PUNCT")],
     ok([6, 7, 8], [5, 9, 10, 11, 12, 13, 14, 15, 16], "unmarked", "factual", "theme_sbj")),
    ("s4", [t("Los", "el", "DET", 2, "SPEC"), t("jefes", "jefe", "NOUN", 4, "SBJ"),
            t("están", "estar", "AUX", 4, "AUX"), t("convencidos", "convencido", "ADJ", 0, "ROOT"),
            t("de", "de", "ADP", 9, "MARK"), t("que", "que", "SCONJ", 9, "MARK"),
            t("Juan", "Juan", "PROPN", 9, "SBJ"), t("lo", "él", "PRON", 9, "DO"),
            t("cortó", "cortar", "VERB", 4, "CCOMP"), t("deliberadamente", "deliberadamente", "ADV", 9, "ADV"),
            t(".", ".", "PUNCT", 4, "PUNCT")],
     ok([7], [5, 6, 8, 9, 10], "unmarked", "attitude", "theme_sbj")),
    ("s5", [t("El", "el", "DET", 2, "SPEC"), t("portavoz", "portavoz", "NOUN", 3, "SBJ"),
            t("dijo", "decir", "VERB", 0, "ROOT"), t("que", "que", "SCONJ", 7, "MARK"),
            t("la", "el", "DET", 6, "SPEC"), t("reunión", "reunión", "NOUN", 7, "SBJ"),
            t("terminó", "terminar", "VERB", 3, "CCOMP"), t("bien", "bien", "ADV", 7, "ADV"),
            t(".", ".", "PUNCT", 3, "PUNCT")],
     ok([5, 6], [4, 7, 8], "unmarked", "reported", "theme_sbj")),
    ("s6", [t("María", "María", "PROPN", 2, "SBJ"), t("cree", "creer", "VERB", 0, "ROOT"),
            t("que", "que", "SCONJ", 6, "MARK"), t("el", "el", "DET", 5, "SPEC"),
            t("plan", "plan", "NOUN", 6, "SBJ"), t("funcionará", "funcionar", "VERB", 2, "CCOMP"),
            t(".", ".", "PUNCT", 2, "PUNCT")],
     ok([4, 5], [3, 6], "unmarked", "attitude", "theme_sbj")),
    ("s7", [t("Los", "el", "DET", 2, "SPEC"), t("medios", "medio", "NOUN", 3, "SBJ"),
            t("afirman", "afirmar", "VERB", 0, "ROOT"), t("que", "que", "SCONJ", 7, "MARK"),
            t("los", "el", "DET", 6, "SPEC"), t("precios", "precio", "NOUN", 7, "SBJ"),
            t("bajarán", "bajar", "VERB", 3, "CCOMP"), t("pronto", "pronto", "ADV", 7, "ADV"),
            t(".", ".", "PUNCT", 3, "PUNCT")],
     ok([5, 6], [4, 7, 8], "unmarked", "reported", "theme_sbj")),
    ("s8", [t("Lo", "el", "DET", 2, "SPEC"), t("importante", "importante", "ADJ", 3, "SBJ"),
            t("es", "ser", "AUX", 0, "ROOT"), t("que", "que", "SCONJ", 7, "MARK"),
            t("el", "el", "DET", 6, "SPEC"), t("ensayo", "ensayo", "NOUN", 7, "SBJ"),
            t("salió", "salir", "VERB", 3, "CCOMP"), t("bien", "bien", "ADV", 7, "ADV"),
            t(".", ".", "PUNCT", 3, "PUNCT")],
     ok([5, 6], [4, 7, 8], "unmarked", "factual", "theme_sbj")),
    ("s9", [t("Aunque", "aunque", "SCONJ", 2, "MARK"), t("llovía", "llover", "VERB", 7, "ADVCL"),
            t("mucho", "mucho", "ADV", 2, "ADV"), t(",", ",", "PUNCT", 2, "PUNCT"),
            t("el", "el", "DET", 6, "SPEC"), t("partido", "partido", "NOUN", 7, "SBJ"),
            t("continuó", "continuar", "VERB", 0, "ROOT"), t(".", ".", "PUNCT", 7, "PUNCT")],
     ok([5, 6], [7, 8], "unmarked", "factual", "theme_sbj")),
    ("s10", [t("Si", "si", "SCONJ", 2, "MARK"), t("llueve", "llover", "VERB", 8, "ADVCL"),
             t("mañana", "mañana", "ADV", 2, "ADV"), t(",", ",", "PUNCT", 2, "PUNCT"),
             t("el", "el", "DET", 6, "SPEC"), t("acto", "acto", "NOUN", 8, "SBJ"),
             t("se", "se", "PRON", 8, "PART"), t("suspenderá", "suspender", "VERB", 0, "ROOT"),
             t(".", ".", "PUNCT", 8, "PUNCT")],
     ok([5, 6], [7, 8, 9], "unmarked", "factual", "theme_sbj")),
]

CORPUS["sintema"] = [
    ("n1", [t("Lo", "el", "PRON", 4, "CSUBJ"), t("que", "que", "PRON", 3, "DO", "PronType=Rel"),
            t("quiero", "querer", "VERB", 1, "REL"), t("es", "ser", "AUX", 0, "ROOT"),
            t("un", "uno", "DET", 6, "SPEC"), t("consejo", "consejo", "NOUN", 4, "ATR"),
            t(".", ".", "PUNCT", 4, "PUNCT")],
     NO_THEME),
    ("n2", [t("Lo", "el", "PRON", 4, "CSUBJ"), t("que", "que", "PRON", 3, "SBJ", "PronType=Rel"),
            t("importa", "importar", "VERB", 1, "REL"), t("es", "ser", "AUX", 0, "ROOT"),
            t("el", "el", "DET", 6, "SPEC"), t("resultado", "resultado", "NOUN", 4, "ATR"),
            t(".", ".", "PUNCT", 4, "PUNCT")],
     NO_THEME),
    ("n3", [t("Llegó", "llegar", "VERB", 0, "ROOT"), t("Juan", "Juan", "PROPN", 1, "SBJ"),
            t("ayer", "ayer", "ADV", 1, "ADV"), t(".", ".", "PUNCT", 1, "PUNCT")],
     NO_THEME),
    ("n4", [t("Ganó", "ganar", "VERB", 0, "ROOT"), t("el", "el", "DET", 3, "SPEC"),
            t("equipo", "equipo", "NOUN", 1, "SBJ"), t("local", "local", "ADJ", 3, "MOD"),
            t(".", ".", "PUNCT", 1, "PUNCT")],
     NO_THEME),
    ("n5", [t("Llueve", "llover", "VERB", 0, "ROOT"), t("mucho", "mucho", "ADV", 1, "ADV"),
            t(".", ".", "PUNCT", 1, "PUNCT")],
     NO_THEME),
    ("n6", [t("Trabajamos", "trabajar", "VERB", 0, "ROOT"), t("por", "por", "ADP", 4, "CASE"),
            t("la", "el", "DET", 4, "SPEC"), t("noche", "noche", "NOUN", 1, "ADV"),
            t(".", ".", "PUNCT", 1, "PUNCT")],
     NO_THEME),
    ("n7", [t("Hace", "hacer", "VERB", 0, "ROOT"), t("frío", "frío", "NOUN", 1, "DO"),
            t("en", "en", "ADP", 5, "CASE"), t("la", "el", "DET", 5, "SPEC"),
            t("calle", "calle", "NOUN", 1, "ADV"), t(".", ".", "PUNCT", 1, "PUNCT")],
     NO_THEME),
    ("n8", [t("Esto", "este", "PRON", 2, "DO"), t("falla", "fallar", "VERB", 0, "ROOT"),
            t("aquí", "aquí", "ADV", 4, "ADV"), t(".", ".", "PUNCT", 3, "PUNCT")],
     REJECTED),
]


# ------------------------------------------------------------ desk corpus --

DESK_TEXTS = {}

DESK_TEXTS["constant_1"] = (
    [
        ("s1", [t("Juan", "Juan", "PROPN", 2, "SBJ"), t("llegó", "llegar", "VERB", 0, "ROOT"),
                t("tarde", "tarde", "ADV", 2, "ADV"), t(".", ".", "PUNCT", 2, "PUNCT")]),
        ("s2", [t("Juan", "Juan", "PROPN", 3, "SBJ"), t("se", "se", "PRON", 3, "PART"),
                t("disculpó", "disculpar", "VERB", 0, "ROOT"), t(".", ".", "PUNCT", 3, "PUNCT")]),
        ("s3", [t("Juan", "Juan", "PROPN", 2, "SBJ"), t("prometió", "prometer", "VERB", 0, "ROOT"),
                t("puntualidad", "puntualidad", "NOUN", 2, "DO"), t(".", ".", "PUNCT", 2, "PUNCT")]),
    ],
    [["constant", 1, "T", 2, "T"], ["constant", 2, "T", 3, "T"]],
)

DESK_TEXTS["constant_2"] = (
    [
        ("s1", [t("La", "el", "DET", 2, "SPEC"), t("empresa", "empresa", "NOUN", 3, "SBJ"),
                t("creció", "crecer", "VERB", 0, "ROOT"), t(".", ".", "PUNCT", 3, "PUNCT")]),
        ("s2", [t("La", "el", "DET", 2, "SPEC"), t("empresa", "empresa", "NOUN", 3, "SBJ"),
                t("contrató", "contratar", "VERB", 0, "ROOT"), t("ingenieros", "ingeniero", "NOUN", 3, "DO"),
                t(".", ".", "PUNCT", 3, "PUNCT")]),
        ("s3", [t("La", "el", "DET", 2, "SPEC"), t("empresa", "empresa", "NOUN", 3, "SBJ"),
                t("abrió", "abrir", "VERB", 0, "ROOT"), t("oficinas", "oficina", "NOUN", 3, "DO"),
                t(".", ".", "PUNCT", 3, "PUNCT")]),
    ],
    [["constant", 1, "T", 2, "T"], ["constant", 2, "T", 3, "T"]],
)

DESK_TEXTS["constant_3"] = (
    [
        ("s1", [t("El", "el", "DET", 2, "SPEC"), t("museo", "museo", "NOUN", 3, "SBJ"),
                t("abrió", "abrir", "VERB", 0, "ROOT"), t(".", ".", "PUNCT", 3, "PUNCT")]),
        ("s2", [t("Llovió", "llover", "VERB", 0, "ROOT"), t("mucho", "mucho", "ADV", 1, "ADV"),
                t(".", ".", "PUNCT", 1, "PUNCT")]),
        ("s3", [t("El", "el", "DET", 2, "SPEC"), t("museo", "museo", "NOUN", 3, "SBJ"),
                t("recibió", "recibir", "VERB", 0, "ROOT"), t("visitantes", "visitante", "NOUN", 3, "DO"),
                t(".", ".", "PUNCT", 3, "PUNCT")]),
    ],
    [["constant", 1, "T", 3, "T"]],
)

DESK_TEXTS["linear_1"] = (
    [
        ("s1", [t("Juan", "Juan", "PROPN", 2, "SBJ"), t("compró", "comprar", "VERB", 0, "ROOT"),
                t("un", "uno", "DET", 4, "SPEC"), t("coche", "coche", "NOUN", 2, "DO"),
                t(".", ".", "PUNCT", 2, "PUNCT")]),
        ("s2", [t("El", "el", "DET", 2, "SPEC"), t("coche", "coche", "NOUN", 3, "SBJ"),
                t("es", "ser", "AUX", 0, "ROOT"), t("rojo", "rojo", "ADJ", 3, "ATR"),
                t(".", ".", "PUNCT", 3, "PUNCT")]),
        ("s3", [t("El", "el", "DET", 2, "SPEC"), t("color", "color", "NOUN", 4, "SBJ"),
                t("rojo", "rojo", "ADJ", 2, "MOD"), t("brilla", "brillar", "VERB", 0, "ROOT"),
                t(".", ".", "PUNCT", 4, "PUNCT")]),
    ],
    [["linear", 1, "R", 2, "T"], ["linear", 2, "R", 3, "T"]],
)

DESK_TEXTS["linear_2"] = (
    [
        ("s1", [t("María", "María", "PROPN", 2, "SBJ"), t("plantó", "plantar", "VERB", 0, "ROOT"),
                t("un", "uno", "DET", 4, "SPEC"), t("rosal", "rosal", "NOUN", 2, "DO"),
                t(".", ".", "PUNCT", 2, "PUNCT")]),
        ("s2", [t("El", "el", "DET", 2, "SPEC"), t("rosal", "rosal", "NOUN", 3, "SBJ"),
                t("floreció", "florecer", "VERB", 0, "ROOT"), t("pronto", "pronto", "ADV", 3, "ADV"),
                t(".", ".", "PUNCT", 3, "PUNCT")]),
    ],
    [["linear", 1, "R", 2, "T"]],
)

DESK_TEXTS["linear_3"] = (
    [
        ("s1", [t("El", "el", "DET", 2, "SPEC"), t("equipo", "equipo", "NOUN", 3, "SBJ"),
                t("ganó", "ganar", "VERB", 0, "ROOT"), t("la", "el", "DET", 5, "SPEC"),
                t("copa", "copa", "NOUN", 3, "DO"), t(".", ".", "PUNCT", 3, "PUNCT")]),
        ("s2", [t("La", "el", "DET", 2, "SPEC"), t("copa", "copa", "NOUN", 3, "SBJ"),
                t("brilla", "brillar", "VERB", 0, "ROOT"), t("en", "en", "ADP", 6, "CASE"),
                t("la", "el", "DET", 6, "SPEC"), t("vitrina", "vitrina", "NOUN", 3, "ADV"),
                t(".", ".", "PUNCT", 3, "PUNCT")]),
        ("s3", [t("La", "el", "DET", 2, "SPEC"), t("vitrina", "vitrina", "NOUN", 3, "SBJ"),
                t("está", "estar", "VERB", 0, "ROOT"), t("en", "en", "ADP", 6, "CASE"),
                t("el", "el", "DET", 6, "SPEC"), t("salón", "salón", "NOUN", 3, "ADV"),
                t(".", ".", "PUNCT", 3, "PUNCT")]),
    ],
    [["linear", 1, "R", 2, "T"], ["linear", 2, "R", 3, "T"]],
)

DESK_TEXTS["split_1"] = (
    [
        ("s1", [t("El", "el", "DET", 2, "SPEC"), t("menú", "menú", "NOUN", 3, "SBJ"),
                t("incluye", "incluir", "VERB", 0, "ROOT"), t("sopa", "sopa", "NOUN", 3, "DO"),
                t("y", "y", "CCONJ", 6, "COORD"), t("carne", "carne", "NOUN", 4, "CONJ"),
                t(".", ".", "PUNCT", 3, "PUNCT")]),
        ("s2", [t("La", "el", "DET", 2, "SPEC"), t("sopa", "sopa", "NOUN", 3, "SBJ"),
                t("está", "estar", "AUX", 0, "ROOT"), t("caliente", "caliente", "ADJ", 3, "ATR"),
                t(".", ".", "PUNCT", 3, "PUNCT")]),
        ("s3", [t("La", "el", "DET", 2, "SPEC"), t("carne", "carne", "NOUN", 3, "SBJ"),
                t("está", "estar", "AUX", 0, "ROOT"), t("fría", "frío", "ADJ", 3, "ATR"),
                t(".", ".", "PUNCT", 3, "PUNCT")]),
    ],
    [["split", 1, "R", 2, "T"], ["split", 1, "R", 3, "T"]],
)

DESK_TEXTS["split_2"] = (
    [
        ("s1", [t("La", "el", "DET", 2, "SPEC"), t("cesta", "cesta", "NOUN", 3, "SBJ"),
                t("contiene", "contener", "VERB", 0, "ROOT"), t("pan", "pan", "NOUN", 3, "DO"),
                t("y", "y", "CCONJ", 6, "COORD"), t("queso", "queso", "NOUN", 4, "CONJ"),
                t(".", ".", "PUNCT", 3, "PUNCT")]),
        ("s2", [t("El", "el", "DET", 2, "SPEC"), t("pan", "pan", "NOUN", 3, "SBJ"),
                t("huele", "oler", "VERB", 0, "ROOT"), t("bien", "bien", "ADV", 3, "ADV"),
                t(".", ".", "PUNCT", 3, "PUNCT")]),
        ("s3", [t("El", "el", "DET", 2, "SPEC"), t("queso", "queso", "NOUN", 3, "SBJ"),
                t("sabe", "saber", "VERB", 0, "ROOT"), t("fuerte", "fuerte", "ADV", 3, "ADV"),
                t(".", ".", "PUNCT", 3, "PUNCT")]),
    ],
    [["split", 1, "R", 2, "T"], ["split", 1, "R", 3, "T"]],
)

DESK_TEXTS["split_3"] = (
    [
        ("s1", [t("El", "el", "DET", 2, "SPEC"), t("plan", "plan", "NOUN", 3, "SBJ"),
                t("incluye", "incluir", "VERB", 0, "ROOT"), t("viajes", "viaje", "NOUN", 3, "DO"),
                t("y", "y", "CCONJ", 6, "COORD"), t("cenas", "cena", "NOUN", 4, "CONJ"),
                t(".", ".", "PUNCT", 3, "PUNCT")]),
        ("s2", [t("Hubo", "haber", "VERB", 0, "ROOT"), t("silencio", "silencio", "NOUN", 1, "DO"),
                t(".", ".", "PUNCT", 1, "PUNCT")]),
        ("s3", [t("Los", "el", "DET", 2, "SPEC"), t("viajes", "viaje", "NOUN", 3, "SBJ"),
                t("cuestan", "costar", "VERB", 0, "ROOT"), t("dinero", "dinero", "NOUN", 3, "DO"),
                t(".", ".", "PUNCT", 3, "PUNCT")]),
        ("s4", [t("Las", "el", "DET", 2, "SPEC"), t("cenas", "cena", "NOUN", 3, "SBJ"),
                t("duran", "durar", "VERB", 0, "ROOT"), t("horas", "hora", "NOUN", 3, "DO"),
                t(".", ".", "PUNCT", 3, "PUNCT")]),
    ],
    [["split", 1, "R", 3, "T"], ["split", 1, "R", 4, "T"]],
)

_FILLERS_1 = [
    ("Llovió", "llover", "ayer", "ayer"),
    ("Nevó", "nevar", "mucho", "mucho"),
    ("Tronó", "tronar", "fuerte", "fuerte"),
    ("Granizó", "granizar", "poco", "poco"),
    ("Diluvió", "diluviar", "después", "después"),
]
_FILLERS_2 = [
    ("Amaneció", "amanecer", "pronto", "pronto"),
    ("Oscureció", "oscurecer", "temprano", "temprano"),
    ("Refrescó", "refrescar", "anoche", "anoche"),
    ("Escampó", "escampar", "luego", "luego"),
    ("Anocheció", "anochecer", "tarde", "tarde"),
]
_FILLERS_3 = [
    ("Llovizna", "lloviznar", "ahora", "ahora"),
    ("Graniza", "granizar", "fuera", "fuera"),
    ("Truena", "tronar", "lejos", "lejos"),
    ("Ventea", "ventear", "mucho", "mucho"),
    ("Chispea", "chispear", "poco", "poco"),
]


def _weather(sid, verb, lemma, adv, adv_lemma):
    return (sid, [t(verb, lemma, "VERB", 0, "ROOT"), t(adv, adv_lemma, "ADV", 1, "ADV"),
                  t(".", ".", "PUNCT", 1, "PUNCT")])


def _derived_doc(intro, fillers, final_two, links):
    sentences = [intro]
    for i, (verb, lemma, adv, adv_lemma) in enumerate(fillers, start=2):
        sentences.append(_weather(f"s{i}", verb, lemma, adv, adv_lemma))
    sentences.extend(final_two)
    return sentences, links


DESK_TEXTS["derived_1"] = _derived_doc(
    ("s1", [t("El", "el", "DET", 2, "SPEC"), t("jardín", "jardín", "NOUN", 3, "SBJ"),
            t("tiene", "tener", "VERB", 0, "ROOT"), t("rosas", "rosa", "NOUN", 3, "DO"),
            t("y", "y", "CCONJ", 6, "COORD"), t("claveles", "clavel", "NOUN", 4, "CONJ"),
            t(".", ".", "PUNCT", 3, "PUNCT")]),
    _FILLERS_1,
    [
        ("s7", [t("Las", "el", "DET", 2, "SPEC"), t("rosas", "rosa", "NOUN", 3, "SBJ"),
                t("crecieron", "crecer", "VERB", 0, "ROOT"), t(".", ".", "PUNCT", 3, "PUNCT")]),
        ("s8", [t("Los", "el", "DET", 2, "SPEC"), t("claveles", "clavel", "NOUN", 3, "SBJ"),
                t("murieron", "morir", "VERB", 0, "ROOT"), t(".", ".", "PUNCT", 3, "PUNCT")]),
    ],
    [["derived", 1, "R", 7, "T"], ["derived", 1, "R", 8, "T"]],
)

DESK_TEXTS["derived_2"] = _derived_doc(
    ("s1", [t("La", "el", "DET", 2, "SPEC"), t("tienda", "tienda", "NOUN", 3, "SBJ"),
            t("vende", "vender", "VERB", 0, "ROOT"), t("flores", "flor", "NOUN", 3, "DO"),
            t("y", "y", "CCONJ", 6, "COORD"), t("plantas", "planta", "NOUN", 4, "CONJ"),
            t(".", ".", "PUNCT", 3, "PUNCT")]),
    _FILLERS_2,
    [
        ("s7", [t("Las", "el", "DET", 2, "SPEC"), t("flores", "flor", "NOUN", 3, "SBJ"),
                t("perfuman", "perfumar", "VERB", 0, "ROOT"), t("la", "el", "DET", 5, "SPEC"),
                t("casa", "casa", "NOUN", 3, "DO"), t(".", ".", "PUNCT", 3, "PUNCT")]),
        ("s8", [t("Las", "el", "DET", 2, "SPEC"), t("plantas", "planta", "NOUN", 3, "SBJ"),
                t("purifican", "purificar", "VERB", 0, "ROOT"), t("el", "el", "DET", 5, "SPEC"),
                t("aire", "aire", "NOUN", 3, "DO"), t(".", ".", "PUNCT", 3, "PUNCT")]),
    ],
    [["derived", 1, "R", 7, "T"], ["derived", 1, "R", 8, "T"]],
)

DESK_TEXTS["derived_3"] = _derived_doc(
    ("s1", [t("El", "el", "DET", 2, "SPEC"), t("taller", "taller", "NOUN", 3, "SBJ"),
            t("repara", "reparar", "VERB", 0, "ROOT"), t("bicicletas", "bicicleta", "NOUN", 3, "DO"),
            t("y", "y", "CCONJ", 6, "COORD"), t("motos", "moto", "NOUN", 4, "CONJ"),
            t(".", ".", "PUNCT", 3, "PUNCT")]),
    _FILLERS_3,
    [
        ("s7", [t("Las", "el", "DET", 2, "SPEC"), t("bicicletas", "bicicleta", "NOUN", 3, "SBJ"),
                t("ocupan", "ocupar", "VERB", 0, "ROOT"), t("espacio", "espacio", "NOUN", 3, "DO"),
                t(".", ".", "PUNCT", 3, "PUNCT")]),
        ("s8", [t("Las", "el", "DET", 2, "SPEC"), t("motos", "moto", "NOUN", 3, "SBJ"),
                t("hacen", "hacer", "VERB", 0, "ROOT"), t("ruido", "ruido", "NOUN", 3, "DO"),
                t(".", ".", "PUNCT", 3, "PUNCT")]),
    ],
    [["derived", 1, "R", 7, "T"], ["derived", 1, "R", 8, "T"]],
)


# -------------------------------------------------------- static fixtures --

UD1 = """# newdoc id = ud1
# sent_id = u1
# text = Vengo del mercado.
1\tVengo\tvenir\tVERB\tVMIP1S0\tNumber=Sing|Person=1\t0\tROOT\t_\t_
2-3\tdel\t_\t_\t_\t_\t_\t_\t_\t_
2\tde\tde\tADP\tSP\t_\t4\tCASE\t_\t_
3\tel\tel\tDET\tDA0MS0\tDefinite=Def\t4\tSPEC\t_\t_
4\tmercado\tmercado\tNOUN\tNCMS000\tGender=Masc\t1\tADV\t_\tSpaceAfter=No
5\t.\t.\tPUNCT\tFP\t_\t1\tPUNCT\t_\t_

# sent_id = u2
# text = Vuelvo al parque.
1\tVuelvo\tvolver\tVERB\tVMIP1S0\tNumber=Sing|Person=1\t0\tROOT\t_\t_
2-3\tal\t_\t_\t_\t_\t_\t_\t_\t_
2\ta\ta\tADP\tSP\t_\t4\tCASE\t_\t_
3\tel\tel\tDET\tDA0MS0\tDefinite=Def\t4\tSPEC\t_\t_
4\tparque\tparque\tNOUN\tNCMS000\tGender=Masc\t1\tADV\t_\tSpaceAfter=No
5\t.\t.\tPUNCT\tFP\t_\t1\tPUNCT\t_\t_
"""

UD2 = """# newdoc id = ud2
# annotator = fixture author
# sent_id = v1
# text = El gato duerme.
# note: comment lines must survive round trips = intact
1\tEl\tel\tDET\tDA0MS0\tDefinite=Def|Gender=Masc|Number=Sing\t2\tSPEC\t_\t_
2\tgato\tgato\tNOUN\tNCMS000\tGender=Masc|Number=Sing\t3\tSBJ\t_\t_
3\tduerme\tdormir\tVERB\tVMIP3S0\tMood=Ind|Number=Sing\t0\tROOT\t_\t_
3.1\t_\t_\t_\t_\t_\t_\t_\t_\tEmpty=Node
4\t.\t.\tPUNCT\tFP\t_\t3\tPUNCT\t_\tSpaceAfter=No

# sent_id = v2
# text = La gata ronronea.
1\tLa\tel\tDET\tDA0FS0\tDefinite=Def|Gender=Fem\t2\tSPEC\t_\t_
2\tgata\tgato\tNOUN\tNCFS000\tGender=Fem\t3\tSBJ\t_\tNamedEntity=No
3\tronronea\tronronear\tVERB\tVMIP3S0\t_\t0\tROOT\t_\t_
4\t.\t.\tPUNCT\tFP\t_\t3\tPUNCT\t_\t_
"""

FREELING = """# newdoc id = freeling_sample
# sent_id = f1
# text = Juan come pan .
1\tJuan\tJuan\tPROPN\t_\t_\t2\tsuj\t_\t_
2\tcome\tcomer\tVERB\t_\t_\t0\tROOT\t_\t_
3\tpan\tpan\tNOUN\t_\t_\t2\tcd\t_\t_
4\t.\t.\tPUNCT\t_\t_\t2\tf\t_\t_

# sent_id = f2
# text = Hoy María canta .
1\tHoy\thoy\tADV\t_\t_\t3\tcc\t_\t_
2\tMaría\tMaría\tPROPN\t_\t_\t3\tsuj\t_\t_
3\tcanta\tcantar\tVERB\t_\t_\t0\tROOT\t_\t_
4\t.\t.\tPUNCT\t_\t_\t3\tf\t_\t_

# sent_id = f3
# text = Llegó Pedro .
1\tLlegó\tllegar\tVERB\t_\t_\t0\tROOT\t_\t_
2\tPedro\tPedro\tPROPN\t_\t_\t1\tsuj\t_\t_
3\t.\t.\tPUNCT\t_\t_\t1\tf\t_\t_
"""


def write_corpus():
    corpus_dir = FIXTURES / "corpus"
    corpus_dir.mkdir(parents=True, exist_ok=True)
    expected = []
    for doc_id, sentences in CORPUS.items():
        text = render_doc(doc_id, [(sid, rows) for sid, rows, _ in sentences])
        (corpus_dir / f"{doc_id}.conllu").write_text(text, encoding="utf-8")
        for sid, _, expect in sentences:
            entry = {"doc": doc_id, "sent_id": sid}
            entry.update(expect)
            expected.append(entry)
    (corpus_dir / "expected.json").write_text(
        json.dumps(expected, ensure_ascii=False, indent=1) + "\n", encoding="utf-8"
    )


def write_desk_corpus():
    prog_dir = FIXTURES / "progression"
    prog_dir.mkdir(parents=True, exist_ok=True)
    expected = {}
    for doc_id, (sentences, links) in DESK_TEXTS.items():
        text = render_doc(doc_id, sentences)
        (prog_dir / f"{doc_id}.conllu").write_text(text, encoding="utf-8")
        expected[doc_id] = links
    (prog_dir / "expected_links.json").write_text(
        json.dumps(expected, ensure_ascii=False, indent=1) + "\n", encoding="utf-8"
    )


def write_static():
    ud_dir = FIXTURES / "ud"
    ud_dir.mkdir(parents=True, exist_ok=True)
    (ud_dir / "ud1.conllu").write_text(UD1 + "\n", encoding="utf-8")
    (ud_dir / "ud2.conllu").write_text(UD2 + "\n", encoding="utf-8")
    freeling_dir = FIXTURES / "freeling"
    freeling_dir.mkdir(parents=True, exist_ok=True)
    (freeling_dir / "sample.conllu").write_text(FREELING + "\n", encoding="utf-8")


def write_embedder_fixtures():
    """Pre-annotated inputs for the vector exporter's tests (wire format)."""
    sys.path.insert(0, str(ROOT / "src"))
    from temarema import default_grammar_path
    from temarema.annotate import annotate_document
    from temarema.conllu import parse_document, serialize_document
    from temarema.rules import parse_grammar

    grammar = parse_grammar(default_grammar_path().read_text(encoding="utf-8"))
    out_dir = ROOT / "embedder" / "tests" / "fixtures"
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, target in (("constant_1", "annotated_ok3.conllu"),
                         ("constant_3", "annotated_gap.conllu")):
        raw = (FIXTURES / "progression" / f"{name}.conllu").read_text(encoding="utf-8")
        doc = annotate_document(parse_document(raw), grammar)
        (out_dir / target).write_text(serialize_document(doc), encoding="utf-8")


def main():
    write_corpus()
    write_desk_corpus()
    write_static()
    write_embedder_fixtures()
    print("fixtures regenerated under", FIXTURES)


if __name__ == "__main__":
    main()
