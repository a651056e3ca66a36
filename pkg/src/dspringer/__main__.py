from dspringer.cli import main

main()
