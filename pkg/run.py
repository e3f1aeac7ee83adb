"""
Command line entry point.

Usage:
    python run.py --help
    python run.py run fixtures/parity.json --state p0 --word 1,0,1
"""
import os

from colorama import just_fix_windows_console
from dotenv import load_dotenv

from fmachina import create_app

# Load environment variables
load_dotenv()
just_fix_windows_console()

cli = create_app(os.getenv('FMACHINA_ENV', 'development'))

if __name__ == '__main__':
    cli()
