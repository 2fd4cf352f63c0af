"""Command harness: corpora, per-graph queries, discharge reports and verification campaigns."""

from .campaigns import (
    CampaignReport,
    cmd_verify_theorem,
    run_corpus_campaign,
    run_lemma_campaign,
    verify_theorem,
)
from .corpus import CorpusItem, enumerate_graphs, graphs_on, load_corpus, resolve_source
from .discharge import cmd_discharge, discharge_report
from .generate import cmd_generate
from .query import cmd_query, query_graph

__all__ = [
    "CampaignReport",
    "CorpusItem",
    "cmd_discharge",
    "cmd_generate",
    "cmd_query",
    "cmd_verify_theorem",
    "discharge_report",
    "enumerate_graphs",
    "graphs_on",
    "load_corpus",
    "query_graph",
    "resolve_source",
    "run_corpus_campaign",
    "run_lemma_campaign",
    "verify_theorem",
]
