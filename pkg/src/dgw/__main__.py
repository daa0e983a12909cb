from dgw.cli import main

main()
