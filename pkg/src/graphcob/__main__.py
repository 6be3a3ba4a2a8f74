from graphcob.cli import main

main()
