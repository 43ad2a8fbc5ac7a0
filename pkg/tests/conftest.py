import os
import sys

# Add project root to path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

# keep test runs from writing the default log file
os.environ.setdefault("FUBINI_LOG_FILE", "")
