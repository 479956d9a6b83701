import ast
import glob
from pathlib import Path

ROOT = Path(__file__).parent.parent
SOURCE_DIRS = ("heiscat", "scripts", "tests")


def test_all_python_files_have_valid_syntax():
    python_files = []
    for top in SOURCE_DIRS:
        python_files += glob.glob(str(ROOT / top / "**" / "*.py"), recursive=True)
    python_files = [f for f in python_files if "venv" not in f and "__pycache__" not in f]
    assert python_files

    for file in python_files:
        with open(file, "r", encoding="utf-8") as f:
            source = f.read()
        try:
            ast.parse(source)
        except SyntaxError as e:
            assert False, f"Syntax error in {file}: {e}"
