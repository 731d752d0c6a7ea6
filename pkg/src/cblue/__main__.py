"""Entry point for python -m cblue invocation."""
from cblue.main import main

if __name__ == "__main__":
    main()
