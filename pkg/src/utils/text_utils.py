import unicodedata
import re


def normalize_text(text: str) -> str:
    """
    Normaliza un identificador escrito por el usuario:
    - Convierte a minúsculas
    - Elimina acentos/tildes
    - Sustituye separadores y caracteres raros por guiones
    - Conserva los puntos (``theorem4.2``)
    """
    if not text or not isinstance(text, str):
        return ""

    text = text.lower()

    text = unicodedata.normalize('NFKD', text)
    text = "".join([c for c in text if not unicodedata.combining(c)])

    text = re.sub(r'[^\w.]+', '-', text)
    text = text.replace('_', '-')

    # Colapsar guiones múltiples y recortar extremos
    text = re.sub(r'-+', '-', text).strip('-')

    return text


def normalize_family_name(name: str) -> str:
    """Normaliza el nombre de una familia de grafos (``H_nk`` -> ``h-nk``)."""
    return normalize_text(name)
