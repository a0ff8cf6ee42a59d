"""Named corpus fields loaded from config/corpus.yaml."""

from .registry import CorpusRegistry, FieldConfig, get_corpus_registry, get_field

__all__ = ["CorpusRegistry", "FieldConfig", "get_corpus_registry", "get_field"]
