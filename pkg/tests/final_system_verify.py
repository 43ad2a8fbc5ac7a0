import os
import sys

# Add project root to path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from dotenv import load_dotenv
from config import Config
from main import EXIT_OK, main

load_dotenv()


def final_acceptance_test() -> int:
    print("🚀 Starting FINAL System Acceptance Test...")
    Config.validate()

    output = os.path.join("logs", "verify_full.json")
    os.makedirs("logs", exist_ok=True)

    print(f"📝 Task: full identity suite, seed {Config.DEFAULT_SEED}, report -> {output}")
    print("-" * 50)

    status = main(["verify", "--suite", "full", "--seed", str(Config.DEFAULT_SEED), "--output", output])
    if status == EXIT_OK:
        print("\n✅ Execution Complete: no unexpected identity failures.")
    else:
        print(f"\n❌ Suite finished with exit status {status}")
    print("-" * 50)
    return status


if __name__ == "__main__":
    sys.exit(final_acceptance_test())
