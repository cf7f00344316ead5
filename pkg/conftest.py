import sys
from pathlib import Path

# modules import each other as src.*, strategies.*, utils.*, validation.*
sys.path.insert(0, str(Path(__file__).resolve().parent))
